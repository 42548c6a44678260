/** DOM rendering of the board grid. Void cells are visually distinct,
 * legal next targets are highlighted, selected waypoints are marked. */

import {
  Coord,
  EMPTY,
  SessionView,
  VOID,
  coordKey,
  parseLayout,
} from "./model.js";

export function renderBoard(
  container: HTMLElement,
  view: SessionView,
  selection: Coord[],
  targets: Set<string>,
  onClick: (cell: Coord) => void,
): void {
  const grid = parseLayout(view.board, view.rows, view.cols);
  const selected = new Set(selection.map(coordKey));
  container.innerHTML = "";
  container.style.gridTemplateColumns = `repeat(${view.cols}, var(--cell))`;
  for (let r = 0; r < view.rows; r++) {
    for (let c = 0; c < view.cols; c++) {
      const cell = document.createElement("button");
      const value = grid[r][c];
      cell.className = "cell";
      if (value === VOID) {
        cell.classList.add("void");
        cell.disabled = true;
      } else {
        if (value !== EMPTY) {
          cell.textContent = value;
        }
        const key = `${r},${c}`;
        if (targets.has(key)) {
          cell.classList.add("target");
        }
        if (selected.has(key)) {
          cell.classList.add("selected");
        }
        cell.addEventListener("click", () => onClick([r, c]));
      }
      cell.dataset.coord = `${r},${c}`;
      container.appendChild(cell);
    }
  }
}
