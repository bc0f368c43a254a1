import { describe, expect, it } from "vitest";

import { buildGridModel, changedCells } from "../src/grid.js";
import type { BoardView } from "../src/types.js";

// .b        top row; column 0 holds a single a, column 1 a b pair
// ab
const view: BoardView = {
  id: "b1",
  width: 2,
  height: 2,
  remaining: 3,
  rows: [".b", "ab"],
  groups: [
    { color: 0, representative: [0, 0], cells: [[0, 0]] },
    {
      color: 1,
      representative: [1, 0],
      cells: [
        [1, 0],
        [1, 1],
      ],
    },
  ],
  legal_moves: [[1, 0]],
  history_depth: 1,
  solved: false,
};

const at = (cells: ReturnType<typeof buildGridModel>["cells"], col: number, row: number) =>
  cells.find((c) => c.col === col && c.row === row)!;

describe("buildGridModel", () => {
  it("flips display rows so row zero sits at the bottom", () => {
    const model = buildGridModel(view);
    expect(model.cells).toHaveLength(4);
    expect(at(model.cells, 0, 0).displayRow).toBe(1);
    expect(at(model.cells, 1, 1).displayRow).toBe(0);
  });

  it("marks empty cells and leaves them unclickable", () => {
    const model = buildGridModel(view);
    const hole = at(model.cells, 0, 1);
    expect(hole.empty).toBe(true);
    expect(hole.clickable).toBe(false);
    expect(hole.groupIndex).toBeNull();
  });

  it("only groups of two or more are clickable", () => {
    const model = buildGridModel(view);
    expect(at(model.cells, 0, 0).clickable).toBe(false);
    expect(at(model.cells, 1, 0).clickable).toBe(true);
    expect(at(model.cells, 1, 1).clickable).toBe(true);
  });

  it("draws outline edges only against other groups", () => {
    const model = buildGridModel(view);
    const lower = at(model.cells, 1, 0);
    const upper = at(model.cells, 1, 1);
    // the b pair shares its internal boundary, so no edge between them
    expect(lower.edgeTop).toBe(false);
    expect(upper.edgeBottom).toBe(false);
    // everything facing out of the group is an edge
    expect(lower.edgeBottom).toBe(true);
    expect(lower.edgeLeft).toBe(true);
    expect(lower.edgeRight).toBe(true);
    expect(upper.edgeTop).toBe(true);
  });

  it("keeps colors aligned with the row characters", () => {
    const model = buildGridModel(view);
    expect(at(model.cells, 0, 0).color).toBe(0);
    expect(at(model.cells, 1, 1).color).toBe(1);
    expect(at(model.cells, 0, 1).color).toBeNull();
  });
});

describe("changedCells", () => {
  it("marks every occupied cell when there is no previous model", () => {
    const model = buildGridModel(view);
    expect(changedCells(null, model)).toEqual(new Set(["0,0", "1,0", "1,1"]));
  });

  it("marks only cells whose paint changed between equal-size views", () => {
    const before = buildGridModel(view);
    const after = buildGridModel({ ...view, rows: [".a", "ab"] });
    expect(changedCells(before, after)).toEqual(new Set(["1,1"]));
  });

  it("marks everything when the dimensions change", () => {
    const before = buildGridModel(view);
    const after = buildGridModel({
      ...view,
      width: 1,
      height: 1,
      rows: ["a"],
      groups: [{ color: 0, representative: [0, 0], cells: [[0, 0]] }],
    });
    expect(changedCells(before, after)).toEqual(new Set(["0,0"]));
  });
});
