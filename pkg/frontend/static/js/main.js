import { ApiClient, ApiError } from "./api.js";
import { renderBoard } from "./board.js";
import { badgeFor, duplicatePositives, formatMove, parseHeaps, winnerBanner, } from "./logic.js";
const api = new ApiClient("");
const state = { session: null, busy: false, hint: null };
function el(id) {
    const node = document.getElementById(id);
    if (!node)
        throw new Error(`missing element #${id}`);
    return node;
}
const heapsInput = el("heaps-input");
const firstSelect = el("first-select");
const startBtn = el("start-btn");
const setupWarning = el("setup-warning");
const gameSection = el("game");
const boardDiv = el("board");
const turnSpan = el("turn-indicator");
const badgeSpan = el("badge");
const hintBtn = el("hint-btn");
const bannerDiv = el("banner");
const toastDiv = el("toast");
const historyList = el("history");
function toast(message) {
    toastDiv.textContent = message;
    toastDiv.hidden = false;
    window.setTimeout(() => {
        toastDiv.hidden = true;
    }, 3000);
}
function render() {
    const session = state.session;
    if (!session)
        return;
    gameSection.hidden = false;
    const humanTurn = session.status === "ongoing" && session.to_move === "human";
    const lastEntry = session.history[session.history.length - 1] ?? null;
    renderBoard(boardDiv, session.state, humanTurn && !state.busy, {
        hint: state.hint,
        engineHeap: lastEntry && lastEntry.mover === "engine"
            ? lastEntry.move.heap_index
            : null,
    }, { onChipClick: submitMove });
    const banner = winnerBanner(session.status);
    bannerDiv.hidden = banner === null;
    bannerDiv.textContent = banner ?? "";
    if (session.status === "ongoing") {
        turnSpan.textContent = humanTurn ? "your turn" : "engine thinking";
        const badge = badgeFor(session.classification);
        badgeSpan.textContent = badge.label;
        badgeSpan.title = badge.tooltip;
        badgeSpan.className = `badge badge-${session.classification.toLowerCase()}`;
    }
    else {
        turnSpan.textContent = "game over";
        badgeSpan.textContent = "";
        badgeSpan.className = "badge";
    }
    hintBtn.disabled = !humanTurn;
    historyList.textContent = "";
    for (const entry of session.history) {
        const item = document.createElement("li");
        item.textContent =
            `${entry.mover}: ${formatMove(entry.move)} ` +
                `(leaves [${entry.state_after.join(", ")}], ${entry.classification_after})`;
        historyList.appendChild(item);
    }
}
async function startGame() {
    setupWarning.textContent = "";
    const heaps = parseHeaps(heapsInput.value);
    if (!heaps) {
        setupWarning.textContent = "Enter heap sizes as non-negative integers.";
        return;
    }
    const dups = duplicatePositives(heaps);
    if (dups.length > 0) {
        setupWarning.textContent =
            `No two nonempty heaps may be equal (duplicate: ${dups.join(", ")}).`;
        return;
    }
    state.busy = true;
    try {
        state.session = await api.createSession(heaps, firstSelect.value === "human");
        state.hint = null;
    }
    catch (err) {
        setupWarning.textContent =
            err instanceof ApiError ? String(err.detail) : "Could not reach the server.";
        return;
    }
    finally {
        state.busy = false;
    }
    render();
}
async function submitMove(heapIndex, targetSize) {
    const session = state.session;
    if (!session || state.busy)
        return;
    state.busy = true;
    render(); // lock the board while the engine replies
    try {
        state.session = await api.postMove(session.id, {
            heap_index: heapIndex,
            new_size: targetSize,
        });
        state.hint = null;
    }
    catch (err) {
        if (err instanceof ApiError && err.status === 422) {
            toast(`Illegal move: ${err.rule ?? "rejected by the rules"}.`);
        }
        else {
            toast("Move failed; the server could not be reached.");
        }
    }
    finally {
        state.busy = false;
    }
    render();
}
async function showHint() {
    const session = state.session;
    if (!session || session.status !== "ongoing")
        return;
    try {
        const result = await api.classify(session.state);
        if (result.best_move) {
            state.hint = result.best_move;
            toast(`Hint: ${formatMove(result.best_move)}.`);
        }
        else {
            state.hint = null;
            toast("No winning move exists.");
        }
    }
    catch {
        toast("Hint unavailable; the server could not be reached.");
    }
    render();
}
startBtn.addEventListener("click", () => void startGame());
hintBtn.addEventListener("click", () => void showHint());
//# sourceMappingURL=main.js.map