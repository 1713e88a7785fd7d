// Dashboard view: totals straight from /api/stats plus one distribution
// chart per dimension, with counts straight from /api/facets.

import { badgeColor } from "./colors.js";
import { DIMENSIONS, type ViewState } from "./state.js";
import { dashboardTotals, dimensionDistribution } from "./viewmodel.js";
import type { FacetCountsPayload, StatsPayload, TaxonomyPayload } from "./types.js";

const DIMENSION_TITLES: Record<string, string> = {
  domain: "Datasets by domain",
  lifecycle: "Datasets by lifecycle stage",
  datatype: "Datasets by data type",
  format: "Datasets by format",
};

export function renderDashboard(
  root: HTMLElement,
  stats: StatsPayload,
  taxonomy: TaxonomyPayload,
  counts: FacetCountsPayload,
  _state: ViewState,
): void {
  root.innerHTML = "";
  const totals = dashboardTotals(stats);

  const cards = document.createElement("div");
  cards.className = "stat-cards";
  const entries: Array<[string, string | number]> = [
    ["Datasets", totals.datasets],
    ["Publications", totals.publications],
    ["Tools", totals.tools],
    ["Organizations", totals.organizations],
    ["Publication years", totals.yearRange],
  ];
  for (const [label, value] of entries) {
    const card = document.createElement("div");
    card.className = "stat-card";
    const number = document.createElement("strong");
    number.textContent = String(value);
    number.dataset.stat = label.toLowerCase().replace(/ /g, "-");
    const caption = document.createElement("span");
    caption.textContent = label;
    card.appendChild(number);
    card.appendChild(caption);
    cards.appendChild(card);
  }
  root.appendChild(cards);

  const charts = document.createElement("div");
  charts.className = "distribution-grid";
  for (const dimension of DIMENSIONS) {
    const bars = dimensionDistribution(taxonomy, counts, dimension);
    const maxCount = Math.max(1, ...bars.map((b) => b.count));
    const panel = document.createElement("section");
    panel.className = "distribution-panel";
    const heading = document.createElement("h3");
    heading.textContent = DIMENSION_TITLES[dimension];
    panel.appendChild(heading);
    for (const bar of bars) {
      const row = document.createElement("div");
      row.className = "distribution-row";
      const label = document.createElement("span");
      label.className = "distribution-label";
      label.textContent = bar.label;
      const track = document.createElement("div");
      track.className = "distribution-track";
      const fill = document.createElement("div");
      fill.className = "distribution-fill";
      fill.style.width = `${(100 * bar.count) / maxCount}%`;
      fill.style.backgroundColor = badgeColor(dimension);
      track.appendChild(fill);
      const count = document.createElement("span");
      count.className = "distribution-count";
      count.dataset.term = bar.id;
      count.textContent = String(bar.count);
      row.appendChild(label);
      row.appendChild(track);
      row.appendChild(count);
      panel.appendChild(row);
    }
    charts.appendChild(panel);
  }
  root.appendChild(charts);
}

export function renderAboutModal(root: HTMLElement, onClose: () => void): void {
  const backdrop = document.createElement("div");
  backdrop.className = "modal-backdrop";
  backdrop.addEventListener("click", (event) => {
    if (event.target === backdrop) onClose();
  });

  const modal = document.createElement("div");
  modal.className = "modal";
  modal.innerHTML = `
    <h2>About this catalog</h2>
    <p>
      A navigable map of engineering-design datasets. Every dataset is
      classified along four dimensions — domain, lifecycle stage, data
      type, and format — and connected to the publications, tools, and
      organizations around it, so you can discover data by any path.
    </p>
    <h3>Contributing</h3>
    <ul>
      <li><a href="https://github.com/" target="_blank" rel="noopener">Submit a dataset</a> — add a record file and open a pull request.</li>
      <li><a href="https://github.com/" target="_blank" rel="noopener">Report an issue</a> — wrong metadata, broken link, missing classification.</li>
    </ul>
  `;
  const close = document.createElement("button");
  close.className = "close-button";
  close.textContent = "×";
  close.addEventListener("click", onClose);
  modal.prepend(close);
  backdrop.appendChild(modal);
  root.appendChild(backdrop);
}
