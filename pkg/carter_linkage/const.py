"""Constants for the Carter linkage toolkit."""
from typing import Final

DOMAIN: Final = "carter_linkage"

# Root system families
FAMILY_A: Final = "A"
FAMILY_D: Final = "D"
FAMILY_E: Final = "E"

FAMILIES: Final = (FAMILY_A, FAMILY_D, FAMILY_E)

MIN_RANK: Final = {FAMILY_A: 1, FAMILY_D: 4, FAMILY_E: 6}
E_RANKS: Final = (6, 7, 8)
MAX_RANK: Final = 9

# Edge signs of a Carter diagram (value of the inner product on the edge)
EDGE_SOLID: Final = -1
EDGE_DOTTED: Final = 1

# Vertex naming (colour classes of a bicoloured diagram)
ALPHA_PREFIX: Final = "α"
BETA_PREFIX: Final = "β"

# Floating point tolerances (spectral module only)
SPECTRUM_TOLERANCE: Final = 1e-9
COXETER_TOLERANCE: Final = 1e-8
CATALOG_SPECTRUM_MARGIN: Final = 1e-6
SPECTRUM_LOWER: Final = 0.0
SPECTRUM_UPPER: Final = 4.0

# Ovsienko reduction: at most REDUCTION_CAP_FACTOR * n^2 inflations
REDUCTION_CAP_FACTOR: Final = 10

# Size of a loctet orbit
LOCTET_SIZE: Final = 8

# Property suite defaults
DEFAULT_SAMPLES: Final = 100
DEFAULT_SEED: Final = 1729
MAX_WORD_LENGTH: Final = 6

# Ranks covered by the acceptance suites
CATALOG_D_RANKS: Final = (4, 5, 6, 7, 8, 9)
TRANSITION_RANKS: Final = (4, 5, 6, 7)
PAIRING_RANKS: Final = (4, 5, 6, 7)
PAIRING_MAX_RANK: Final = 8
REDUCE_RANKS: Final = (4, 5, 6, 7)
DUAL_RANKS: Final = (4, 5, 6, 7)
COXETER_TYPES: Final = (
    "A1", "A2", "A3", "A4",
    "D4", "D5", "D6", "D7",
    "E6", "E7", "E8",
)

# Full linkage system sizes of C(D_l); ranks above 7 have 2l labels
EXPECTED_TOTALS: Final = {4: 24, 5: 42, 6: 76, 7: 142}
# E-component sizes (labels no D ambient produces) and the size of each of their two orbits
EXPECTED_E_COMPONENT: Final = {5: 32, 6: 64, 7: 128}
EXPECTED_E_ORBIT_SIZE: Final = {5: 16, 6: 32, 7: 64}
EXPECTED_E_ORBIT_COUNT: Final = 2

# Printed inverse of the D5 partial Cartan matrix, scaled by 4
D5_INVERSE_SCALE: Final = 4
D5_INVERSE_SCALED: Final = (
    (5, 4, 3, 6, 2),
    (4, 8, 4, 8, 4),
    (3, 4, 5, 6, 2),
    (6, 8, 6, 12, 4),
    (2, 4, 2, 4, 4),
)

# E8 / D7 pairs. Roots use the two-row layout (τ1, τ3, τ4, τ5, τ6, τ7, τ8; τ2),
# labels the Γ-set order (τ3, τ4, τ5, τ6, τ7, τ8; τ2).
E8_D7_PAIR_COUNT: Final = 14
E8_D7_GAMMA_NODES: Final = (3, 4, 5, 6, 7, 8, 2)
E8_D7_EXTENSION_NODE: Final = 1
E8_D7_POSITIVE_PAIRS: Final = (
    ((2, 3, 4, 3, 2, 1, 0, 2), (2, 4, 6, 5, 4, 3, 2, 3), (0, 0, 0, 0, 0, -1, 0)),
    ((2, 3, 4, 3, 2, 1, 1, 2), (2, 4, 6, 5, 4, 3, 1, 3), (0, 0, 0, 0, -1, 1, 0)),
    ((2, 3, 4, 3, 2, 2, 1, 2), (2, 4, 6, 5, 4, 2, 1, 3), (0, 0, 0, -1, 1, 0, 0)),
    ((2, 3, 4, 3, 3, 2, 1, 2), (2, 4, 6, 5, 3, 2, 1, 3), (0, 0, -1, 1, 0, 0, 0)),
    ((2, 3, 4, 4, 3, 2, 1, 2), (2, 4, 6, 4, 3, 2, 1, 3), (0, -1, 1, 0, 0, 0, 0)),
    ((2, 3, 5, 4, 3, 2, 1, 2), (2, 4, 5, 4, 3, 2, 1, 3), (-1, 1, 0, 0, 0, 0, -1)),
    ((2, 3, 5, 4, 3, 2, 1, 3), (2, 4, 5, 4, 3, 2, 1, 2), (-1, 0, 0, 0, 0, 0, 1)),
)
E8_D7_PAIR_SUM: Final = (4, 7, 10, 8, 6, 4, 2, 5)

# Verification suites (ordering of the report follows these names)
SUITE_CRITERION: Final = "criterion"
SUITE_DUAL: Final = "dual"
SUITE_E8D7: Final = "e8d7"
SUITE_PAIRING: Final = "pairing"
SUITE_REDUCE_ALL: Final = "reduce-all"
SUITE_SPECTRUM: Final = "spectrum"
SUITE_TABLE1: Final = "table1"
SUITE_TRANSITIONS: Final = "transitions"

ALL_SUITES: Final = (
    SUITE_CRITERION,
    SUITE_DUAL,
    SUITE_E8D7,
    SUITE_PAIRING,
    SUITE_REDUCE_ALL,
    SUITE_SPECTRUM,
    SUITE_TABLE1,
    SUITE_TRANSITIONS,
)

# Configuration keys (validated CLI options)
CONF_SUITES: Final = "suites"
CONF_CRITERION_DIAGRAMS: Final = "criterion_diagrams"
CONF_SAMPLES: Final = "samples"
CONF_SEED: Final = "seed"
CONF_FORMAT: Final = "format"
CONF_OUT: Final = "out"
CONF_WHAT: Final = "what"
CONF_NAME: Final = "name"

# Export formats and exportable objects
FORMAT_JSON: Final = "json"
FORMAT_DOT: Final = "dot"
FORMAT_CSV: Final = "csv"
EXPORT_FORMATS: Final = (FORMAT_JSON, FORMAT_DOT, FORMAT_CSV)

EXPORT_ROOTS: Final = "roots"
EXPORT_DIAGRAM: Final = "diagram"
EXPORT_GAMMA: Final = "gamma"
EXPORT_LINKAGE: Final = "linkage"
EXPORT_ORBITS: Final = "orbits"
EXPORT_TABLE1: Final = "table1"
EXPORT_TRANSITION: Final = "transition"

# Which formats each exportable object supports
EXPORT_SUPPORT: Final = {
    EXPORT_ROOTS: (FORMAT_JSON,),
    EXPORT_DIAGRAM: (FORMAT_JSON, FORMAT_DOT),
    EXPORT_GAMMA: (FORMAT_JSON,),
    EXPORT_LINKAGE: (FORMAT_JSON, FORMAT_CSV),
    EXPORT_ORBITS: (FORMAT_JSON, FORMAT_DOT),
    EXPORT_TABLE1: (FORMAT_CSV, FORMAT_JSON),
    EXPORT_TRANSITION: (FORMAT_JSON,),
}

# CLI exit codes
EXIT_OK: Final = 0
EXIT_FAILURE: Final = 1
EXIT_USAGE: Final = 2

# Action history kept by the verification runner
MAX_ACTION_HISTORY: Final = 200
