"""Dependency-knowledge word sense disambiguation toolkit."""

from .corpus import (
    CONTENT_POS,
    CorpusFormatError,
    ParseNode,
    ParseTree,
    TreeStructureError,
    extract_sentences,
    format_conll,
    parse_conll,
    read_conll,
    read_conll_file,
)
from .evaluation import (
    AnswerKey,
    EvalReport,
    KeyFormatError,
    mfs_baseline,
    random_baseline,
    read_key,
    score_answers,
    write_key,
)
from .inventory import (
    InventoryFormatError,
    Sense,
    SenseInventory,
    gloss_tree,
    load_inventory,
)
from .kb import (
    KbFormatError,
    KbStats,
    KnowledgeBase,
    build_kb,
    dumps_kb,
    load_kb,
    loads_kb,
    merge_kb,
    prune_kb,
    save_kb,
)
from .wsd import (
    SenseChoice,
    SenseScore,
    Target,
    TargetResolutionError,
    disambiguate_document,
    disambiguate_word,
    node_matching,
    sentence_weights,
    tree_matching,
)

__version__ = "0.1.0"
