// Pure view-side helpers: input parsing, the chip-click convention, and
// wording. Move legality and P/N always come from the server.
/** Parse a comma- or space-separated heap list; null when malformed. */
export function parseHeaps(text) {
    const parts = text.trim().split(/[\s,]+/).filter((p) => p.length > 0);
    if (parts.length === 0)
        return null;
    const heaps = [];
    for (const part of parts) {
        if (!/^\d+$/.test(part))
            return null;
        heaps.push(Number(part));
    }
    return heaps;
}
/** Positive values that occur more than once (the pre-submit warning). */
export function duplicatePositives(heaps) {
    const seen = new Set();
    const dups = new Set();
    for (const h of heaps) {
        if (h <= 0)
            continue; // empty heaps may repeat
        if (seen.has(h))
            dups.add(h);
        seen.add(h);
    }
    return [...dups].sort((a, b) => a - b);
}
/**
 * Clicking the k-th chip from the bottom (0-indexed) proposes reducing
 * the heap to k chips, so the bottom chip empties the heap.
 */
export function chipClickTarget(chipIndex) {
    return chipIndex;
}
/** Badge for the position the human currently faces. */
export function badgeFor(classification) {
    if (classification === "N") {
        return {
            label: "winning position",
            tooltip: "N-position: the player to move can force a win with perfect play.",
        };
    }
    return {
        label: "losing position",
        tooltip: "P-position: whoever must move now loses if the opponent plays perfectly.",
    };
}
export function formatMove(move) {
    return `take heap ${move.heap_index} to ${move.new_size}`;
}
export function winnerBanner(status) {
    if (status === "human_won")
        return "You win! You took the last chip.";
    if (status === "engine_won")
        return "Engine wins. It took the last chip.";
    return null;
}
//# sourceMappingURL=logic.js.map