// Pure view-side helpers: input parsing, the chip-click convention, and
// wording. Move legality and P/N always come from the server.

import type { Classification, GameStatus, MoveDict } from "./api.js";

/** Parse a comma- or space-separated heap list; null when malformed. */
export function parseHeaps(text: string): number[] | null {
  const parts = text.trim().split(/[\s,]+/).filter((p) => p.length > 0);
  if (parts.length === 0) return null;
  const heaps: number[] = [];
  for (const part of parts) {
    if (!/^\d+$/.test(part)) return null;
    heaps.push(Number(part));
  }
  return heaps;
}

/** Positive values that occur more than once (the pre-submit warning). */
export function duplicatePositives(heaps: number[]): number[] {
  const seen = new Set<number>();
  const dups = new Set<number>();
  for (const h of heaps) {
    if (h <= 0) continue; // empty heaps may repeat
    if (seen.has(h)) dups.add(h);
    seen.add(h);
  }
  return [...dups].sort((a, b) => a - b);
}

/**
 * Clicking the k-th chip from the bottom (0-indexed) proposes reducing
 * the heap to k chips, so the bottom chip empties the heap.
 */
export function chipClickTarget(chipIndex: number): number {
  return chipIndex;
}

export interface Badge {
  label: string;
  tooltip: string;
}

/** Badge for the position the human currently faces. */
export function badgeFor(classification: Classification): Badge {
  if (classification === "N") {
    return {
      label: "winning position",
      tooltip:
        "N-position: the player to move can force a win with perfect play.",
    };
  }
  return {
    label: "losing position",
    tooltip:
      "P-position: whoever must move now loses if the opponent plays perfectly.",
  };
}

export function formatMove(move: MoveDict): string {
  return `take heap ${move.heap_index} to ${move.new_size}`;
}

export function winnerBanner(status: GameStatus): string | null {
  if (status === "human_won") return "You win! You took the last chip.";
  if (status === "engine_won") return "Engine wins. It took the last chip.";
  return null;
}
