"""Hard-instance generators: boards whose clearing encodes other problems.

Two constructions ship with the workbench.  A two-column board encodes
splitting 3m numbers into m triples of equal sum; a five-column board
encodes satisfying a 3-CNF formula.  Both come with independent
structural validators, and the partition boards are small enough to
hand to the oracle.
"""

from clickomania.oracle import Budget, is_solvable
from clickomania.partition_gen import (
    PartitionInstance,
    find_partition,
    partition_board,
    validate_partition_board,
)
from clickomania.sat_gen import CnfFormula, SatGenParams, sat_board, validate_sat_board

yes = PartitionInstance(6, (2, 2, 2, 2, 2, 2))
no = PartitionInstance(16, (5, 5, 5, 5, 5, 7))
print("Number-partition boards (two columns, five colors):")
for name, inst in (("partitionable", yes), ("non-partitionable", no)):
    board = partition_board(inst)
    assert validate_partition_board(board, inst)
    triples = find_partition(inst)
    answer = is_solvable(board, Budget(max_states=2_000_000, max_time=120.0))
    print(f"  {name}: elements {inst.elements}, target {inst.target}")
    print(f"    triples: {triples}")
    print(f"    board {board.width}x{board.height}, oracle says {answer!r}")
print()

formula = CnfFormula(2, ((1, -2, 2), (-1, -1, 2)))
params = SatGenParams.defaults(formula)
board = sat_board(formula, params)
assert validate_sat_board(board, formula, params)
print("A formula board (five columns, three colors):")
print(f"  clauses {formula.clauses} over {formula.num_vars} variables")
print(f"  unit h0={params.h0}, lock sizes {params.locks}")
print(f"  board {board.width}x{board.height}"
      f" ({sum(len(c) for c in board.columns)} blocks)")
print()
print("Solving formula boards is exactly as hard as the formulas, so the")
print("validator checks structure, not satisfiability: every key, lock,")
print("barrier, and bomb is recounted cell by cell from the formula.")
