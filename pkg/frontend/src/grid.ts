// Pure rendering model: a flat list of cells derived from one service
// view, with group membership and outline edges precomputed so the DOM
// layer only paints.

import { EMPTY_COLOR, colorFor } from "./palette.js";
import type { BoardView } from "./types.js";

export interface CellModel {
  col: number;
  row: number; // row 0 at the bottom, as the service counts
  displayRow: number; // 0 at the top, as the DOM lays out
  empty: boolean;
  color: number | null;
  css: string;
  groupIndex: number | null;
  clickable: boolean;
  // group outline edges in display orientation
  edgeTop: boolean;
  edgeRight: boolean;
  edgeBottom: boolean;
  edgeLeft: boolean;
}

export interface GridModel {
  width: number;
  height: number;
  cells: CellModel[];
}

const key = (col: number, row: number) => `${col},${row}`;

export function buildGridModel(view: BoardView): GridModel {
  const groupAt = new Map<string, number>();
  view.groups.forEach((group, index) => {
    for (const [col, row] of group.cells) groupAt.set(key(col, row), index);
  });

  const cells: CellModel[] = [];
  for (let displayRow = 0; displayRow < view.height; displayRow++) {
    const line = view.rows[displayRow] ?? "";
    for (let col = 0; col < view.width; col++) {
      const row = view.height - 1 - displayRow;
      const ch = line[col] ?? ".";
      if (ch === ".") {
        cells.push({
          col,
          row,
          displayRow,
          empty: true,
          color: null,
          css: EMPTY_COLOR,
          groupIndex: null,
          clickable: false,
          edgeTop: false,
          edgeRight: false,
          edgeBottom: false,
          edgeLeft: false,
        });
        continue;
      }
      const color = ch.charCodeAt(0) - 97;
      const groupIndex = groupAt.get(key(col, row)) ?? null;
      const group = groupIndex === null ? null : view.groups[groupIndex];
      const foreign = (c: number, r: number) => groupAt.get(key(c, r)) !== groupIndex;
      cells.push({
        col,
        row,
        displayRow,
        empty: false,
        color,
        css: colorFor(color),
        groupIndex,
        clickable: group !== null && group.cells.length >= 2,
        edgeTop: foreign(col, row + 1),
        edgeRight: foreign(col + 1, row),
        edgeBottom: foreign(col, row - 1),
        edgeLeft: foreign(col - 1, row),
      });
    }
  }
  return { width: view.width, height: view.height, cells };
}

// Cells whose content changed between two views, used for the settle
// animation; views of different dimensions change everything.
export function changedCells(before: GridModel | null, after: GridModel): Set<string> {
  const changed = new Set<string>();
  if (!before || before.width !== after.width || before.height !== after.height) {
    for (const cell of after.cells) {
      if (!cell.empty) changed.add(key(cell.col, cell.row));
    }
    return changed;
  }
  const previous = new Map(
    before.cells.map((cell) => [key(cell.col, cell.row), cell.css] as const),
  );
  for (const cell of after.cells) {
    if (!cell.empty && previous.get(key(cell.col, cell.row)) !== cell.css) {
      changed.add(key(cell.col, cell.row));
    }
  }
  return changed;
}
