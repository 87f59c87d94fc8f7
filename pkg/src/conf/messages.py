EMPTY_INPUT = "Input is empty"
BAD_HEADER = "Header must start with Z,symbol,group,period"
MALFORMED_NUMBER = "Malformed number {value!r} at row {row}, column {column!r}"
WRONG_ROW_LENGTH = "Row {row} has {found} cells, expected {expected}"
DUPLICATE_Z = "Duplicate atomic number Z={z}"
DUPLICATE_SYMBOL = "Duplicate symbol {symbol!r}"
INVALID_ELEMENT = "Invalid element at row {row}: {reason}"
INVALID_TABLE = "Invalid property table: {reason}"

UNKNOWN_Z = "Atomic number Z={z} is not in the layout"
UNKNOWN_SYMBOL = "Unknown element symbol {symbol!r}"
UNKNOWN_PROPERTY = "Unknown property {name!r}"
NO_PROPERTIES = "At least one property must be selected"
ZERO_SPREAD = "Property {name!r} has zero spread"
TOO_FEW_VALUES = "Property {name!r} needs at least two values, found {found}"

NON_POSITIVE = "{name} must be a positive integer, got {value}"
NEGATIVE = "{name} must be a non-negative integer, got {value}"
WEISE_NOT_EXACT = "Weise numerator {numerator} is not divisible by 12 for n={n}"

INVALID_SHELL = "Invalid shell n={n}, l={l}: need 0 <= l < n"
BAD_SHELL_LABEL = "Cannot parse shell label {label!r}"
BAD_ORDER = "Unknown order {order!r}; use madelung, hydrogenic or ray:K"
BAD_SLOPE = "Ray slope must be finite and <= -1, got {k}"

NOT_PARTIAL_ORDER = "Relation is not a partial order: {axiom} fails"
PAIR_OUTSIDE_GROUND = "Pair {pair} uses items outside the ground set"
GROUND_TOO_LARGE = "Linear extensions are counted only for at most {limit} items, got {size}"
NO_GROUP_EXCLUDED = "Excluded from positional order (no group in layout): {symbols}"
EMPTY_POSITIONAL = "Positional order is empty"

TOO_FEW_ITEMS = "Need at least {needed} usable items, got {found}"
MISSING_EXCLUDED = "Excluded for missing values: {symbols}"
BAD_METRIC = "Unknown metric {metric!r}"
BAD_LINKAGE = "Unknown linkage {linkage!r}"
CUT_ARGUMENTS = "Give exactly one of k or height"
UNREACHABLE_K = "k={k} is not attainable; attainable values are {attainable}"
BAD_HEIGHT = "Cut height must be non-negative, got {height}"
NOT_SUBSET = "Items {items} are not in the space"
NOT_A_LEAF = "Items {items} are not leaves of the dendrogram"
BAD_QUANTILE = "Quantile must lie in (0, 1], got {q}"
BAD_NEWICK = "Cannot read Newick tree: {reason}"

PETTIFOR_UNKNOWN = "Symbol {symbol!r} is not on the Pettifor scale"
BAD_PATTERN = "Unknown pattern kind {kind!r}; use diagonal, knights_move or secondary_periodicity"
COMPOUND_ROW_ERROR = "Row {row}: {reason}"
EMPTY_CELL = "empty cell"

INTERNAL_ERROR = "Internal invariant failure: {reason}"
NO_INTERIOR_CUT = "No attainable cut with 1 < k < N; attainable values are {attainable}"
FILE_NOT_FOUND = "Cannot read {path}: {reason}"
BAD_OPTIONS = "Invalid options: {reason}"
