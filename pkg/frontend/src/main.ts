// DOM wiring.  Everything painted here is derived from the last service
// response through the pure model modules; this file only moves it into
// elements and routes events back to the client.

import { ServiceClient, ServiceError } from "./api.js";
import { buildGridModel, changedCells, GridModel } from "./grid.js";
import { isLight } from "./palette.js";
import {
  applyClick,
  applyHint,
  applySolvability,
  applyUndo,
  canUndo,
  hintedCells,
  SessionState,
  startSession,
} from "./state.js";
import type { BoardView } from "./types.js";

const client = new ServiceClient((url, init) => fetch(url, init));

const el = {
  boardText: document.getElementById("board-text") as HTMLTextAreaElement,
  loadButton: document.getElementById("load") as HTMLButtonElement,
  partitionTarget: document.getElementById("partition-target") as HTMLInputElement,
  partitionElements: document.getElementById("partition-elements") as HTMLInputElement,
  partitionButton: document.getElementById("generate-partition") as HTMLButtonElement,
  satText: document.getElementById("sat-clauses") as HTMLInputElement,
  satVars: document.getElementById("sat-vars") as HTMLInputElement,
  satButton: document.getElementById("generate-sat") as HTMLButtonElement,
  hintButton: document.getElementById("hint") as HTMLButtonElement,
  hintBudget: document.getElementById("hint-budget") as HTMLInputElement,
  undoButton: document.getElementById("undo") as HTMLButtonElement,
  grid: document.getElementById("grid") as HTMLDivElement,
  status: document.getElementById("status") as HTMLDivElement,
  badge: document.getElementById("badge") as HTMLSpanElement,
  banner: document.getElementById("banner") as HTMLDivElement,
  hintLabel: document.getElementById("hint-label") as HTMLSpanElement,
  remaining: document.getElementById("remaining") as HTMLSpanElement,
};

let state: SessionState | null = null;
let lastModel: GridModel | null = null;
let busy = false;

function setBusy(value: boolean): void {
  busy = value;
  const controls = [
    el.loadButton,
    el.partitionButton,
    el.satButton,
    el.hintButton,
    el.undoButton,
  ];
  for (const control of controls) control.disabled = value;
  if (!value && state) el.undoButton.disabled = !canUndo(state);
  if (!value && !state) {
    el.hintButton.disabled = true;
    el.undoButton.disabled = true;
  }
}

function setStatus(text: string, isError = false): void {
  el.status.textContent = text;
  el.status.classList.toggle("error", isError);
}

function cellSize(view: BoardView): number {
  const fitWidth = Math.floor(900 / Math.max(1, view.width));
  const fitHeight = Math.floor(640 / Math.max(1, view.height));
  return Math.max(3, Math.min(28, fitWidth, fitHeight));
}

function render(): void {
  if (!state) return;
  const view = state.view;
  const model = buildGridModel(view);
  const settled = changedCells(lastModel, model);
  const hinted = new Set(hintedCells(state).map(([c, r]) => `${c},${r}`));
  const size = cellSize(view);

  el.grid.style.gridTemplateColumns = `repeat(${Math.max(1, view.width)}, ${size}px)`;
  el.grid.style.gridAutoRows = `${size}px`;
  el.grid.replaceChildren();
  for (const cell of model.cells) {
    const div = document.createElement("div");
    div.className = "cell";
    div.style.background = cell.css;
    if (cell.empty) div.classList.add("empty");
    if (cell.clickable) div.classList.add("clickable");
    if (!cell.empty && cell.color !== null && isLight(cell.color)) {
      div.classList.add("light");
    }
    if (cell.edgeTop) div.classList.add("edge-top");
    if (cell.edgeRight) div.classList.add("edge-right");
    if (cell.edgeBottom) div.classList.add("edge-bottom");
    if (cell.edgeLeft) div.classList.add("edge-left");
    if (hinted.has(`${cell.col},${cell.row}`)) div.classList.add("hinted");
    if (settled.has(`${cell.col},${cell.row}`)) div.classList.add("settle");
    div.dataset.col = String(cell.col);
    div.dataset.row = String(cell.row);
    div.dataset.group = cell.groupIndex === null ? "" : String(cell.groupIndex);
    el.grid.appendChild(div);
  }
  lastModel = model;

  el.remaining.textContent = `${view.remaining} blocks, ${view.width}x${view.height}`;
  el.banner.hidden = !view.solved;
  if (view.solved) {
    el.banner.textContent = `Solved in ${state.moveCount} clicks`;
  }
  el.undoButton.disabled = busy || !canUndo(state);
  el.hintButton.disabled = busy || view.solved;
  if (state.hint) {
    const { move, projected, exact } = state.hint;
    el.hintLabel.textContent = move
      ? `${exact ? "removes" : "removes at least"} ${projected}`
      : "no moves";
  } else {
    el.hintLabel.textContent = "";
  }
  el.badge.textContent = state.solvability ?? "…";
  el.badge.className = `badge ${state.solvability ?? "pending"}`;
}

function flashGroup(groupIndex: string): void {
  const cells = el.grid.querySelectorAll<HTMLDivElement>(
    groupIndex === "" ? ".cell" : `.cell[data-group="${groupIndex}"]`,
  );
  for (const cell of cells) {
    cell.classList.remove("flash");
    void cell.offsetWidth; // restart the animation
    cell.classList.add("flash");
  }
}

async function refreshSolvability(): Promise<void> {
  if (!state) return;
  const id = state.view.id;
  try {
    const result = await client.solvability(id);
    if (state && state.view.id === id) {
      state = applySolvability(state, result.solvable);
      render();
    }
  } catch {
    // the badge stays pending; the board itself is unaffected
  }
}

async function adopt(load: () => Promise<BoardView>): Promise<void> {
  setBusy(true);
  try {
    state = startSession(await load());
    lastModel = null;
    setStatus("");
    render();
    void refreshSolvability();
  } catch (error) {
    setStatus(error instanceof Error ? error.message : String(error), true);
  } finally {
    setBusy(false);
  }
}

async function handleCellClick(target: HTMLDivElement): Promise<void> {
  if (!state || busy) return;
  const col = Number(target.dataset.col);
  const row = Number(target.dataset.row);
  setBusy(true);
  try {
    const view = await client.clickCell(state.view.id, [col, row]);
    state = applyClick(state, view);
    render();
    void refreshSolvability();
  } catch (error) {
    if (error instanceof ServiceError && error.status === 409) {
      flashGroup(target.dataset.group ?? "");
      setStatus("that group cannot be clicked", true);
    } else {
      setStatus(error instanceof Error ? error.message : String(error), true);
    }
  } finally {
    setBusy(false);
  }
}

el.loadButton.addEventListener("click", () => {
  void adopt(() => client.createBoard(el.boardText.value));
});

el.partitionButton.addEventListener("click", () => {
  const target = Number(el.partitionTarget.value);
  const elements = el.partitionElements.value
    .split(",")
    .map((part) => Number(part.trim()))
    .filter((n) => !Number.isNaN(n));
  void adopt(() => client.generatePartition({ target, elements }));
});

el.satButton.addEventListener("click", () => {
  const numVars = Number(el.satVars.value);
  const clauses = el.satText.value
    .split(";")
    .map((clause) =>
      clause
        .trim()
        .split(/\s+/)
        .map(Number)
        .filter((n) => !Number.isNaN(n) && n !== 0),
    )
    .filter((clause) => clause.length > 0);
  void adopt(() => client.generateSat({ num_vars: numVars, clauses }));
});

el.grid.addEventListener("click", (event) => {
  const target = (event.target as HTMLElement).closest<HTMLDivElement>(".cell");
  if (target && !target.classList.contains("empty")) void handleCellClick(target);
});

el.undoButton.addEventListener("click", async () => {
  if (!state || busy || !canUndo(state)) return;
  setBusy(true);
  try {
    const view = await client.undo(state.view.id);
    state = applyUndo(state, view);
    render();
    void refreshSolvability();
  } catch (error) {
    setStatus(error instanceof Error ? error.message : String(error), true);
  } finally {
    setBusy(false);
  }
});

el.hintButton.addEventListener("click", async () => {
  if (!state || busy) return;
  const budget = Number(el.hintBudget.value) || undefined;
  setBusy(true);
  try {
    const hint = await client.hint(state.view.id, budget);
    state = applyHint(state, hint);
    render();
  } catch {
    el.hintLabel.textContent = "inconclusive";
  } finally {
    setBusy(false);
  }
});

setBusy(false);
setStatus("paste a board or generate an instance to begin");
