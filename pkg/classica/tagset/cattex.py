"""CATTEX09 part-of-speech inventory."""
from classica.utils.errors import UnknownTagError

# The 38 tags that have a Morphalou counterpart
MAPPED_TAGS: tuple[str, ...] = (
    "INJ",
    "ADVgen", "ADVneg", "ADVint", "ADVsub",
    "CONcoo", "CONsub",
    "VERcjg", "VERinf", "VERppe", "VERppa",
    "PRE",
    "DETdef", "DETndf", "DETdem", "DETpos", "DETind", "DETrel", "DETint", "DETcom",
    "PROper", "PROimp", "PROadv", "PROpos", "PROdem", "PROind",
    "PROord", "PROrel", "PROint", "PROcom",
    "ADJqua", "ADJind", "ADJord", "ADJpos",
    "NOMcom",
    "ADJcar", "DETcar", "PROcar",
)

PUNCTUATION_TAGS: tuple[str, ...] = ("PONfbl", "PONfrt", "PONpxx", "PONpga", "PONpdr")

# Handled outside the Morphalou mapping
SPECIAL_TAGS: tuple[str, ...] = (
    "NOMpro",
    "ETR", "ABR", "OUT",
    "PRE.DETdef", "PRE.PROper", "PRE.PROrel",
    "ADVneg.PROper", "CONsub.PROper",
)

CATTEX_TAGS: frozenset[str] = frozenset(MAPPED_TAGS + PUNCTUATION_TAGS + SPECIAL_TAGS)

PROPER_NOUN = "NOMpro"
CONTRACTED_ARTICLE = "PRE.DETdef"


def parse_pos(code: str) -> str:
    """Validate a CATTEX code, rejecting anything outside the closed inventory."""
    if code not in CATTEX_TAGS:
        raise UnknownTagError(f"Unknown CATTEX tag {code!r}")
    return code


def is_punctuation(pos: str | None) -> bool:
    return pos is not None and pos.startswith("PON")


def is_proper_noun(pos: str | None) -> bool:
    return pos == PROPER_NOUN
