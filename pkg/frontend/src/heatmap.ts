// Domain x lifecycle heatmap with desert/oasis cell labels.

import { heatmapShade } from "./viewmodel.js";
import type { HeatmapPayload } from "./types.js";

const CELL_BASE = [13, 148, 136]; // teal, matching the domain accent

export function renderHeatmap(root: HTMLElement, payload: HeatmapPayload): void {
  root.innerHTML = "";

  const intro = document.createElement("p");
  intro.className = "heatmap-intro";
  intro.textContent =
    "Dataset counts per domain and lifecycle stage. Empty cells are data " +
    "deserts; strongly populated cells are oases.";
  root.appendChild(intro);

  const maxCount = Math.max(0, ...payload.cells.flat());
  const table = document.createElement("table");
  table.className = "heatmap-table";

  const head = table.createTHead().insertRow();
  head.appendChild(document.createElement("th"));
  for (const label of payload.col_labels) {
    const th = document.createElement("th");
    th.textContent = label;
    head.appendChild(th);
  }

  const body = table.createTBody();
  payload.rows.forEach((rowId, r) => {
    const tr = body.insertRow();
    const rowHead = document.createElement("th");
    rowHead.textContent = payload.row_labels[r];
    tr.appendChild(rowHead);
    payload.cols.forEach((colId, c) => {
      const cell = tr.insertCell();
      const count = payload.cells[r][c];
      const label = payload.cell_labels[r][c];
      cell.textContent = String(count);
      cell.className = `heatmap-cell cell-${label}`;
      cell.dataset.row = rowId;
      cell.dataset.col = colId;
      cell.title = `${payload.row_labels[r]} × ${payload.col_labels[c]}: ${count} (${label})`;
      const alpha = heatmapShade(count, maxCount);
      cell.style.backgroundColor = `rgba(${CELL_BASE.join(",")},${alpha.toFixed(3)})`;
    });
  });
  root.appendChild(table);

  const legend = document.createElement("p");
  legend.className = "heatmap-legend";
  legend.innerHTML =
    '<span class="cell-desert legend-chip">desert</span>' +
    '<span class="cell-sparse legend-chip">sparse</span>' +
    '<span class="cell-normal legend-chip">normal</span>' +
    '<span class="cell-oasis legend-chip">oasis</span>';
  root.appendChild(legend);
}
