from classica.tagset.cattex import CATTEX_TAGS, parse_pos, is_punctuation, is_proper_noun
from classica.tagset.morph_bundle import (
    MorphBundle,
    UNKNOWN_MORPH,
    serialize_morph,
    parse_morph,
    parse_morph_field,
    merge_bundles,
)
from classica.tagset.mappings import (
    MorphalouCategory,
    TagsetMappings,
    cattex_to_morphalou,
    flexion_to_cattex,
    bundle_from_flexions,
    default_mappings,
    load_mapping_tsv,
)
