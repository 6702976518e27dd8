"""Shared constants: artifact headers, schema version, event names."""

SCHEMA_VERSION = "1"

RADIAL_CSV_HEADER = ("r", "U", "U1", "U2", "U3")
ORBIT_CSV_HEADER = ("s", "w1", "w2", "w3", "w4")
BRANCH_CSV_HEADER = ("gamma", "R_gamma", "U_at_R", "lambda", "u0")
PROFILE_CSV_HEADER = ("x", "u")

# event names shared by the radial and autonomous drivers
EVENT_U_ZERO = "u_zero"
EVENT_U_PRIME_ZERO = "u_prime_zero"
EVENT_BLOW_UP = "blow_up"
EVENT_DERIVATIVE_BLOW_UP = "derivative_blow_up"
EVENT_W1_ZERO = "w1_zero"
EVENT_W2_ZERO = "w2_zero"
EVENT_NORM_BLOW_UP = "norm_blow_up"

# relative radius accuracy of event localization
EVENT_REL_ACCURACY = 1e-12
