LOG_FORMAT = "%(levelname)s %(name)s: %(message)s"

# verify appendix / Proposition 3 sweeps
DEFAULT_APPENDIX_M_RANGE = (2, 6)
PROPOSITION3_M_RANGE = (2, 10)

# random sweeps
DEFAULT_TRIALS = 500
DEFAULT_SEED = 7
WEIGHT_RANGE = (2, 10)       # inclusive
MAX_CHAIN_LENGTH = 12
MAX_D_CHAIN_LENGTH = 10
MAX_BOUNDARY_CURVES = 4
MAX_DENOMINATOR = 12
MAX_INCIDENCE = 3

# brute-force fundamental cycle oracle
FUNDAMENTAL_MAX_VERTICES = 5
FUNDAMENTAL_WEIGHT_RANGE = (2, 4)
FUNDAMENTAL_COEFFICIENT_BOUND = 6
FUNDAMENTAL_RANDOM_GRAPHS = 200

MACHINE_JSON_INDENT = 4
