GRID = 8

INF = float("inf")

RUN_CONFIG_DEFAULTS = {
    "q_order": 100,
    "t_window": 12,
    "scan_limit": 4000,
    "precision": 50,
    "shards": 1,
    "output": "json",
}

OUTPUT_FORMATS = ["json", "csv", "pretty"]

OUTPUT_LEVELS = ["debug", "info", "normal"]

OUTPUT_DIR_ENV = ["BO_OUTPUT_DIR"]

RC_QUERY = 2
RC_CONSISTENCY = 3

COEFF_METHODS = ["ct", "integrand", "multisum", "closed_form", "all"]

CLOSED_FORM_NAMES = ["n2_pos", "n2_mixed", "n1_neg"]

THETA_IDENTITIES = ["bilateral_n1", "inverse_theta", "higher_level"]

ASYM_DEFAULT_TERMS = 3

ASYM_DEFAULT_Y = ["0.1", "0.05", "0.025"]

NUMERIC_TOLERANCE = "1e-30"

SCAN_CHECKPOINTS = [1000, 2000, 4000]

SCAN_CSV_COLUMNS = ["l", "coefficient", "p", "ratio"]

FALSE_THETA_PIVOTS = {
    "default": ("descending", "ascending"),
    "reversed": ("ascending", "descending"),
    "descending": ("descending", "descending"),
    "ascending": ("ascending", "ascending"),
}

COLLISION_NOTE = (
    "Queries must satisfy r_j != s_k for every positive index r_j and negative index s_k. "
    "The condition -r_j-1/2 != s_k+1/2 is vacuous for non-negative indices, r_j != s_k is the operative one. "
    "Colliding queries are computed literally with allow_collision and reported next to the vanishing claim."
)

# Signed coefficients of F_(2,3,4,5) printed next to its positive quotient by (q;q)_inf
TABLE_COEFFICIENTS = {43: 2, 100: -7, 153: 18, 245: -2, 538: -81, 713: 112, 894: -4}

TABLE_QUERY = [2, 3, 4, 5]

# name, description and expected value of every printed instance regenerated by bo_examples
GOLDEN_EXAMPLES = [
    {"name": "pochhammer_q6", "description": "(q;q)_inf to q^6", "expected": {"0": "1", "1": "-1", "2": "-1", "5": "1"}},
    {"name": "pentagonal_signs", "description": "(q;q)_inf at q^7, q^12, q^15, sign (-1)^k at k(3k-1)/2 and k(3k+1)/2", "expected": {"7": "1", "12": "-1", "15": "-1"}},
    {"name": "partitions", "description": "p(0), p(5), p(10)", "expected": {"0": "1", "5": "7", "10": "42"}},
    {"name": "theta_terms", "description": "Theta(t) at t^(1/2), t^(-1/2), t^(3/2)", "expected": {"1/2": "q^(1/8)", "-1/2": "-q^(1/8)", "3/2": "-q^(9/8)"}},
    {"name": "triple_product", "description": "Jacobi triple product to q^50 on zeta in [-8, 8]", "expected": {"passed": "true"}},
    {"name": "f_single_zero", "description": "F_(0) to q^11", "expected": {"1": "1", "3": "-1", "6": "1", "10": "-1"}},
    {"name": "psi", "description": "Rogers false theta to q^11", "expected": {"0": "1", "1": "-1", "3": "1", "6": "-1", "10": "1"}},
    {"name": "negative_single_zero", "description": "coefficient of t^(-1/2) to q^8", "expected": {"0": "1", "1": "-1", "3": "1", "6": "-1"}},
    {"name": "collision_claim", "description": "vanishing claim for a colliding pair", "expected": {"vanishing_claim": "0"}},
    {"name": "bilateral_n1", "description": "n=1 bilateral identity at (10, q^20) and (14, q^40)", "expected": {"10/20": "true", "14/40": "true"}},
    {"name": "coefficient_table", "description": "F_(2,3,4,5) coefficients to q^900", "expected": dict((str(k), str(v)) for k, v in TABLE_COEFFICIENTS.items())},
    {"name": "false_theta_zero", "description": "false theta pair of F_(0)", "expected": {"P": "-1", "Q": "1"}},
    {"name": "euler_values", "description": "E_0(1), E_1(1), E_2(1)", "expected": {"0": "1", "1": "1/2", "2": "0"}},
    {"name": "c1_pure", "description": "2^n c_1 for r=(2,3,4,5)", "expected": {"c1": "-19"}},
    {"name": "c1_mixed", "description": "2^n c_1 for pos=(0), neg=(1)", "expected": {"c1": "1/2"}},
]

VERIFY_PROPERTIES = [
    "order_propagation",
    "pochhammer_inverse",
    "partition_recurrence",
    "triple_product",
    "state_closure",
    "state_generating_function",
    "oracle_diagonality",
    "compress_idempotence",
    "partition_pairs",
    "three_way",
    "multisum_valuation",
    "bilateral_n1",
    "inverse_theta",
    "higher_level",
    "false_theta_round_trip",
    "false_theta_uniqueness",
    "false_theta_bounds",
    "false_theta_single",
    "c1_pure",
    "c1_mixed",
    "euler_identities",
    "order_of_accuracy",
    "theta_transform",
    "numeric_agreement",
    "ratio_positivity",
    "collision_paths",
]
