from classica.lexicon.lexicon import (
    Lexicon,
    LexiconEntry,
    load_lexicon,
    load_name_list,
    lookup,
    save_lexicon,
)
