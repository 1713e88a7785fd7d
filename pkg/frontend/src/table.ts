// Table view: facet sidebar, result table with color-coded badges, and
// the dataset detail panel.

import { AtlasClient } from "./api.js";
import { badgeColor } from "./colors.js";
import { DIMENSIONS, toggleFacet, setText, selectDataset, type ViewState } from "./state.js";
import { tableRows } from "./viewmodel.js";
import type { DatasetDetail, TaxonomyPayload } from "./types.js";

const DIMENSION_TITLES: Record<string, string> = {
  domain: "Domain",
  lifecycle: "Lifecycle Stage",
  datatype: "Data Type",
  format: "Format",
};

export type Dispatch = (next: ViewState) => void;

export async function renderTable(
  root: HTMLElement,
  client: AtlasClient,
  taxonomy: TaxonomyPayload,
  state: ViewState,
  dispatch: Dispatch,
): Promise<void> {
  const [payload, facetCounts] = await Promise.all([
    client.datasets(state),
    client.facetCounts(state),
  ]);

  root.innerHTML = "";
  const layout = el("div", "table-layout");

  // facet sidebar
  const sidebar = el("aside", "facet-sidebar");
  const search = el("input", "facet-search") as HTMLInputElement;
  search.type = "search";
  search.placeholder = "Search title or description…";
  search.value = state.text;
  search.addEventListener("change", () => dispatch(setText(state, search.value)));
  sidebar.appendChild(search);

  for (const dimension of DIMENSIONS) {
    const section = el("section", "facet-group");
    const heading = el("h3");
    heading.textContent = DIMENSION_TITLES[dimension];
    heading.style.borderLeftColor = badgeColor(dimension);
    section.appendChild(heading);
    for (const term of taxonomy.dimensions[dimension] ?? []) {
      const count = facetCounts.counts[term.id] ?? 0;
      const row = el("label", "facet-option");
      if (term.parent) row.classList.add("facet-child");
      const box = el("input") as HTMLInputElement;
      box.type = "checkbox";
      box.checked = (state.facets[dimension] ?? []).includes(term.id);
      box.addEventListener("change", () => dispatch(toggleFacet(state, dimension, term.id)));
      row.appendChild(box);
      const text = el("span");
      text.textContent = `${term.label}`;
      row.appendChild(text);
      const badge = el("span", "facet-count");
      badge.textContent = String(count);
      row.appendChild(badge);
      section.appendChild(row);
    }
    sidebar.appendChild(section);
  }
  layout.appendChild(sidebar);

  // result table
  const mainPane = el("div", "table-pane");
  const summary = el("p", "result-summary");
  summary.textContent = `${payload.total} dataset${payload.total === 1 ? "" : "s"}`;
  mainPane.appendChild(summary);

  const table = el("table", "dataset-table") as HTMLTableElement;
  const head = table.createTHead().insertRow();
  for (const title of ["Dataset", "Classifications", "License"]) {
    const cell = document.createElement("th");
    cell.textContent = title;
    head.appendChild(cell);
  }
  const body = table.createTBody();
  for (const row of tableRows(payload, state)) {
    const tr = body.insertRow();
    tr.dataset.id = row.id;
    if (row.selected) tr.classList.add("selected");
    tr.addEventListener("click", () =>
      dispatch(selectDataset(state, row.selected ? null : row.id)),
    );

    const title = tr.insertCell();
    title.textContent = row.title;

    const badges = tr.insertCell();
    for (const badge of row.badges) {
      const chip = el("span", "badge");
      chip.textContent = badge.label;
      chip.style.backgroundColor = badge.color;
      chip.dataset.dimension = badge.dimension;
      badges.appendChild(chip);
    }

    const license = tr.insertCell();
    license.textContent = row.license + (row.licenseOpen ? " (open)" : "");
  }
  mainPane.appendChild(table);
  layout.appendChild(mainPane);

  if (state.selectedDataset) {
    try {
      const detail = await client.datasetDetail(state.selectedDataset);
      layout.appendChild(detailPanel(detail, state, dispatch));
    } catch {
      const panel = el("aside", "detail-panel");
      panel.appendChild(errorBanner("Could not load dataset details."));
      layout.appendChild(panel);
    }
  }

  root.appendChild(layout);
}

function detailPanel(detail: DatasetDetail, state: ViewState, dispatch: Dispatch): HTMLElement {
  const panel = el("aside", "detail-panel");
  const close = el("button", "close-button");
  close.textContent = "×";
  close.addEventListener("click", () => dispatch(selectDataset(state, null)));
  panel.appendChild(close);

  const title = el("h2");
  title.textContent = detail.title;
  panel.appendChild(title);

  const description = el("p");
  description.textContent = detail.description;
  panel.appendChild(description);

  const facts = el("dl", "detail-facts");
  addFact(facts, "Source", link(detail.source_url));
  addFact(facts, "License", textNode(detail.license + (detail.license_open ? " (open)" : "")));
  if (detail.doi) addFact(facts, "DOI", textNode(detail.doi));
  if (detail.size_description) addFact(facts, "Size", textNode(detail.size_description));
  if (detail.temporal_coverage) {
    addFact(facts, "Coverage", textNode(detail.temporal_coverage.join("–")));
  }
  const scholar = link(detail.scholar_url);
  scholar.textContent = "Google Scholar search";
  addFact(facts, "Literature", scholar);
  panel.appendChild(facts);

  const badges = el("div", "detail-badges");
  for (const c of detail.classifications) {
    const chip = el("span", "badge");
    chip.textContent = c.label;
    chip.style.backgroundColor = badgeColor(c.dimension);
    badges.appendChild(chip);
  }
  panel.appendChild(badges);

  const sections: Array<[string, string, "outgoing" | "incoming"]> = [
    ["Key publications", "used_in", "outgoing"],
    ["Processed by", "processes", "incoming"],
    ["Validated by", "validated_on", "incoming"],
    ["Maintained by", "maintained_by", "outgoing"],
    ["Derived from", "derived_from", "outgoing"],
  ];
  for (const [heading, kind, direction] of sections) {
    const refs = detail.neighbors[direction][kind] ?? [];
    if (refs.length === 0) continue;
    const h = el("h3");
    h.textContent = heading;
    panel.appendChild(h);
    const list = el("ul");
    for (const ref of refs) {
      const item = el("li");
      item.textContent = ref.label;
      list.appendChild(item);
    }
    panel.appendChild(list);
  }
  return panel;
}

export function errorBanner(message: string): HTMLElement {
  const banner = el("div", "error-banner");
  banner.textContent = message + " ";
  const retry = el("button");
  retry.textContent = "Retry";
  retry.addEventListener("click", () => window.location.reload());
  banner.appendChild(retry);
  return banner;
}

function el(tag: string, className?: string): HTMLElement {
  const node = document.createElement(tag);
  if (className) node.className = className;
  return node;
}

function addFact(list: HTMLElement, term: string, value: Node): void {
  const dt = document.createElement("dt");
  dt.textContent = term;
  const dd = document.createElement("dd");
  dd.appendChild(value);
  list.appendChild(dt);
  list.appendChild(dd);
}

function link(url: string): HTMLAnchorElement {
  const anchor = document.createElement("a");
  anchor.href = url;
  anchor.textContent = url;
  anchor.target = "_blank";
  anchor.rel = "noopener";
  return anchor;
}

function textNode(text: string): Text {
  return document.createTextNode(text);
}
