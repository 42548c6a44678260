/** Application wiring: game picker, board clicks, move box, banners.
 * The view is always rebuilt from the last server response. */

import { ApiClient, ApiError } from "./api.js";
import { renderBoard } from "./board.js";
import {
  ClickResult,
  Coord,
  SessionView,
  bannerText,
  clickCell,
  passAvailable,
  statusText,
  targetsFor,
} from "./model.js";

const api = new ApiClient("");

interface Ui {
  picker: HTMLSelectElement;
  newGame: HTMLButtonElement;
  board: HTMLElement;
  status: HTMLElement;
  banner: HTMLElement;
  notice: HTMLElement;
  choices: HTMLElement;
  moveBox: HTMLInputElement;
  sendMove: HTMLButtonElement;
  passButton: HTMLButtonElement;
  history: HTMLElement;
}

let view: SessionView | null = null;
let selection: Coord[] = [];
let noticeTimer: number | undefined;

function ui(): Ui {
  const get = <T extends HTMLElement>(id: string) =>
    document.getElementById(id) as T;
  return {
    picker: get("game-picker"),
    newGame: get("new-game"),
    board: get("board"),
    status: get("status"),
    banner: get("banner"),
    notice: get("notice"),
    choices: get("choices"),
    moveBox: get("move-box"),
    sendMove: get("send-move"),
    passButton: get("pass-button"),
    history: get("history"),
  };
}

function showNotice(text: string): void {
  const { notice } = ui();
  notice.textContent = text;
  notice.classList.add("visible");
  window.clearTimeout(noticeTimer);
  noticeTimer = window.setTimeout(
    () => notice.classList.remove("visible"),
    1800,
  );
}

function renderChoices(choices: string[]): void {
  const box = ui().choices;
  box.innerHTML = "";
  if (choices.length === 0) {
    return;
  }
  const label = document.createElement("span");
  label.textContent = "complete the move:";
  box.appendChild(label);
  for (const text of choices) {
    const button = document.createElement("button");
    button.textContent = text;
    button.addEventListener("click", () => void submit(text));
    box.appendChild(button);
  }
}

function render(): void {
  const elements = ui();
  if (view === null) {
    return;
  }
  const targets = view.terminal
    ? new Set<string>()
    : targetsFor(view.legal_moves, selection);
  renderBoard(elements.board, view, selection, targets, onCellClick);
  elements.status.textContent = statusText(view);
  const banner = bannerText(view);
  elements.banner.textContent = banner ?? "";
  elements.banner.classList.toggle("visible", banner !== null);
  elements.passButton.hidden = view.terminal || !passAvailable(view.legal_moves);
  elements.history.textContent = view.history.join("\n");
}

function onCellClick(cell: Coord): void {
  if (view === null || view.terminal) {
    return;
  }
  const result: ClickResult = clickCell(view.legal_moves, selection, cell);
  selection = [...result.selection];
  renderChoices(result.choices ?? []);
  if (result.submit !== undefined) {
    void submit(result.submit);
    return;
  }
  render();
}

async function submit(text: string): Promise<void> {
  if (view === null) {
    return;
  }
  selection = [];
  renderChoices([]);
  try {
    const outcome = await api.postMove(view.id, text);
    view = outcome;
    if (!outcome.valid) {
      showNotice("invalid move");
    }
  } catch (error) {
    showNotice(error instanceof ApiError ? error.message : "request failed");
  }
  render();
}

async function newGame(): Promise<void> {
  const elements = ui();
  selection = [];
  renderChoices([]);
  try {
    view = await api.createSession(elements.picker.value);
  } catch (error) {
    showNotice(error instanceof ApiError ? error.message : "request failed");
    return;
  }
  render();
}

async function refresh(): Promise<void> {
  if (view === null || view.terminal) {
    return;
  }
  try {
    const fresh = await api.getState(view.id);
    if (fresh.round !== view.round || fresh.terminal !== view.terminal) {
      view = fresh;
      selection = [];
      renderChoices([]);
      render();
    }
  } catch {
    // transient; the next poll retries
  }
}

async function boot(): Promise<void> {
  const elements = ui();
  const games = await api.listGames();
  for (const game of games) {
    const option = document.createElement("option");
    option.value = game.id;
    option.textContent = `${game.id} (${game.players}p, ${game.rows}x${game.cols})`;
    elements.picker.appendChild(option);
  }
  elements.newGame.addEventListener("click", () => void newGame());
  elements.sendMove.addEventListener("click", () => {
    const text = elements.moveBox.value.trim();
    if (text !== "") {
      elements.moveBox.value = "";
      void submit(text);
    }
  });
  elements.moveBox.addEventListener("keydown", (event) => {
    if (event.key === "Enter") {
      elements.sendMove.click();
    }
  });
  elements.passButton.addEventListener("click", () => void submit("x"));
  window.setInterval(() => void refresh(), 2500);
  await newGame();
}

document.addEventListener("DOMContentLoaded", () => void boot());
