// Board rendering: each heap is a column of chips stacked on a baseline.
// Chips are buttons; their click target (the size the heap would shrink
// to) follows the chip-click convention in logic.ts.
import { chipClickTarget } from "./logic.js";
export function renderBoard(container, heaps, interactive, highlights, callbacks) {
    container.textContent = "";
    heaps.forEach((size, heapIndex) => {
        const column = document.createElement("div");
        column.className = "heap";
        if (highlights.engineHeap === heapIndex)
            column.classList.add("engine-moved");
        const stack = document.createElement("div");
        stack.className = "chips";
        for (let chip = size - 1; chip >= 0; chip--) {
            const target = chipClickTarget(chip);
            const btn = document.createElement("button");
            btn.className = "chip";
            btn.disabled = !interactive;
            btn.title = `take heap ${heapIndex} to ${target}`;
            if (highlights.hint &&
                highlights.hint.heap_index === heapIndex &&
                target >= highlights.hint.new_size) {
                btn.classList.add("hint");
            }
            btn.addEventListener("click", () => callbacks.onChipClick(heapIndex, target));
            stack.appendChild(btn);
        }
        column.appendChild(stack);
        const label = document.createElement("div");
        label.className = "heap-label";
        label.textContent = `#${heapIndex} (${size})`;
        column.appendChild(label);
        container.appendChild(column);
    });
}
//# sourceMappingURL=board.js.map