/**
 * Pure view-state logic for the playtest client.
 *
 * The server is the single source of rule truth: this module never
 * decides legality itself, it only parses layout text, matches click
 * selections against the server-provided legal move texts, and builds
 * the move text to submit. Every submission is one of the server's own
 * legal move strings or raw user input - never a synthesized variant.
 */

export interface GameInfo {
  id: string;
  players: number;
  rows: number;
  cols: number;
}

export interface SessionView {
  id: string;
  game: string;
  board: string;
  rows: number;
  cols: number;
  round: number;
  current_player: number;
  players: number;
  terminal: boolean;
  winner: number | null;
  legal_moves: string[];
  history: string[];
}

export interface MoveOutcome extends SessionView {
  valid: boolean;
}

export type Coord = readonly [number, number];

export const EMPTY = "_";
export const VOID = ".";

export function parseLayout(text: string, rows: number, cols: number): string[][] {
  const lines = text.split("\n");
  if (lines.length !== rows) {
    throw new Error(`expected ${rows} rows, got ${lines.length}`);
  }
  return lines.map((line, r) => {
    if (line.length !== cols) {
      throw new Error(`row ${r} has ${line.length} cells, expected ${cols}`);
    }
    return line.split("");
  });
}

export function coordKey(cell: Coord): string {
  return `${cell[0]},${cell[1]}`;
}

/** One clickable coordinate path for a legal move text. */
export interface MovePath {
  text: string;
  coords: Coord[];
}

/**
 * Expand legal move texts into clickable paths. Slides keep waypoint
 * order; pair moves may be entered in either cell order; passes have
 * no path (they get a button).
 */
export function movePaths(legal: string[]): MovePath[] {
  const paths: MovePath[] = [];
  for (const text of legal) {
    const tokens = text.split(" ");
    const verb = tokens[0];
    if (verb === "x") {
      continue;
    }
    if (verb === "p") {
      paths.push({ text, coords: [[Number(tokens[2]), Number(tokens[3])]] });
    } else if (verb === "pp") {
      const a: Coord = [Number(tokens[1]), Number(tokens[2])];
      const b: Coord = [Number(tokens[3]), Number(tokens[4])];
      paths.push({ text, coords: [a, b] });
      paths.push({ text, coords: [b, a] });
    } else if (verb === "m") {
      const nums = tokens.slice(1).filter((t) => !t.startsWith("="));
      const coords: Coord[] = [];
      for (let i = 0; i + 1 < nums.length; i += 2) {
        coords.push([Number(nums[i]), Number(nums[i + 1])]);
      }
      paths.push({ text, coords });
    }
  }
  return paths;
}

function startsWith(path: MovePath, selection: Coord[]): boolean {
  if (selection.length > path.coords.length) {
    return false;
  }
  return selection.every(
    (cell, i) => path.coords[i][0] === cell[0] && path.coords[i][1] === cell[1],
  );
}

/** Cells that could extend the current selection, for highlighting. */
export function targetsFor(legal: string[], selection: Coord[]): Set<string> {
  const targets = new Set<string>();
  for (const path of movePaths(legal)) {
    if (startsWith(path, selection) && path.coords.length > selection.length) {
      targets.add(coordKey(path.coords[selection.length]));
    }
  }
  return targets;
}

export interface ClickResult {
  selection: Coord[];
  /** exactly one move completed: submit it */
  submit?: string;
  /** several completed moves fit the selection: let the user pick */
  choices?: string[];
  targets: Set<string>;
}

/**
 * Fold a board click into the selection. If the extended selection
 * matches exactly one legal move and no longer move continues it, the
 * move is submitted; when several moves complete here (promotion
 * piece, drop piece, stop-or-continue jumps) the caller shows the
 * choices. A click that fits nothing restarts the selection from the
 * clicked cell.
 */
export function clickCell(
  legal: string[],
  selection: Coord[],
  cell: Coord,
): ClickResult {
  const paths = movePaths(legal);
  let candidate = [...selection, cell];
  let matching = paths.filter((p) => startsWith(p, candidate));
  if (matching.length === 0) {
    candidate = [cell];
    matching = paths.filter((p) => startsWith(p, candidate));
    if (matching.length === 0) {
      return { selection: [], targets: targetsFor(legal, []) };
    }
  }
  const exact = [
    ...new Set(
      matching
        .filter((p) => p.coords.length === candidate.length)
        .map((p) => p.text),
    ),
  ];
  const longer = matching.filter((p) => p.coords.length > candidate.length);
  if (exact.length === 1 && longer.length === 0) {
    return { selection: [], submit: exact[0], targets: new Set() };
  }
  const targets = new Set<string>(
    longer.map((p) => coordKey(p.coords[candidate.length])),
  );
  if (exact.length > 0) {
    return { selection: candidate, choices: exact, targets };
  }
  return { selection: candidate, targets };
}

export function passAvailable(legal: string[]): boolean {
  return legal.includes("x");
}

export function bannerText(view: SessionView): string | null {
  if (!view.terminal) {
    return null;
  }
  return view.winner === null ? "winner: none" : `winner: player ${view.winner}`;
}

export function statusText(view: SessionView): string {
  if (view.terminal) {
    return bannerText(view) ?? "";
  }
  return `round ${view.round} - player ${view.current_player} to move`;
}
