"""Clickomania puzzles: engine, exact solvers, and hardness generators.

The engine plays the game: maximal same-color groups of two or more
blocks vanish on click, the rest settles column by column.  One-column
puzzles get fast exact deciders (a grammar-based cubic one for any
number of colors, a linear one for two), an exact partial-clearing
optimizer, and witness extraction.  General boards go through a
budgeted exhaustive search.  The generators emit two-column and
five-column boards whose solvability encodes number partitioning and
CNF satisfiability.
"""

from .engine import (
    Board,
    BoardParseError,
    Cell,
    EMPTY_BOARD,
    Group,
    IllegalMoveError,
    Move,
    Solution,
    board_from_columns,
    canonical_key,
    click,
    find_groups,
    group_at,
    legal_moves,
    parse_board,
    remaining_blocks,
    render_board,
    replay,
)
from .grammar import CfgDecision, Derivation, decide_cfg, span_table
from .optimize import OptimizeResult, max_removable_word, optimize_word
from .oracle import Budget, OracleResult, best_move, is_solvable, max_removable, search
from .partition_gen import (
    PartitionInstance,
    find_partition,
    partition_board,
    random_instance,
    validate_partition_board,
)
from .sat_gen import (
    CnfFormula,
    SatGenParams,
    parse_dimacs,
    random_formula,
    sat_board,
    validate_sat_board,
)
from .twocolor import certifying_split, decide_two_color, two_color_solution
from .witness import extract_solution
from .words import (
    EMPTY_WORD,
    Word,
    word_from_board,
    word_from_text,
    word_to_board,
    word_to_text,
)

__version__ = "0.1.0"

__all__ = [
    "Board",
    "BoardParseError",
    "Budget",
    "Cell",
    "CfgDecision",
    "CnfFormula",
    "Derivation",
    "EMPTY_BOARD",
    "EMPTY_WORD",
    "Group",
    "IllegalMoveError",
    "Move",
    "OptimizeResult",
    "OracleResult",
    "PartitionInstance",
    "SatGenParams",
    "Solution",
    "Word",
    "best_move",
    "board_from_columns",
    "canonical_key",
    "certifying_split",
    "click",
    "decide_cfg",
    "decide_two_color",
    "extract_solution",
    "find_groups",
    "find_partition",
    "group_at",
    "is_solvable",
    "legal_moves",
    "max_removable",
    "max_removable_word",
    "optimize_word",
    "parse_board",
    "parse_dimacs",
    "partition_board",
    "random_formula",
    "random_instance",
    "remaining_blocks",
    "render_board",
    "replay",
    "sat_board",
    "search",
    "span_table",
    "two_color_solution",
    "validate_partition_board",
    "validate_sat_board",
    "word_from_board",
    "word_from_text",
    "word_to_board",
    "word_to_text",
]
