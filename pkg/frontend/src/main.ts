// App shell: owns the ViewState, syncs it with the URL, and re-renders
// the active view after every transition. Views never talk to each
// other; they dispatch state transitions back here.

import { AtlasClient } from "./api.js";
import { renderDashboard, renderAboutModal } from "./dashboard.js";
import { renderGraph } from "./graph.js";
import { renderHeatmap } from "./heatmap.js";
import {
  fromUrlParams,
  setView,
  toggleAbout,
  toUrlParams,
  type ViewName,
  type ViewState,
} from "./state.js";
import { errorBanner, renderTable } from "./table.js";
import type { GraphPayload, TaxonomyPayload } from "./types.js";

const client = new AtlasClient("");

let state: ViewState = fromUrlParams(window.location.search);
let taxonomy: TaxonomyPayload | null = null;
let graphCache: GraphPayload | null = null;

const content = document.getElementById("content") as HTMLElement;
const modalHost = document.getElementById("modal-host") as HTMLElement;

function dispatch(next: ViewState): void {
  state = next;
  const params = toUrlParams(state);
  window.history.replaceState(null, "", params ? `?${params}` : window.location.pathname);
  void render();
}

async function render(): Promise<void> {
  for (const button of document.querySelectorAll<HTMLButtonElement>("nav button[data-view]")) {
    button.classList.toggle("active", button.dataset.view === state.view);
  }
  modalHost.innerHTML = "";
  if (state.aboutOpen) {
    renderAboutModal(modalHost, () => dispatch(toggleAbout(state)));
  }
  try {
    if (taxonomy === null) {
      taxonomy = await client.taxonomy();
    }
    if (state.view === "table") {
      await renderTable(content, client, taxonomy, state, dispatch);
    } else if (state.view === "dashboard") {
      const [stats, counts] = await Promise.all([client.stats(), client.facetCounts(state)]);
      renderDashboard(content, stats, taxonomy, counts, state);
    } else if (state.view === "graph") {
      if (graphCache === null) {
        graphCache = await client.graph();
      }
      renderGraph(content, graphCache, state, dispatch);
    } else {
      renderHeatmap(content, await client.heatmap());
    }
  } catch (failure) {
    content.innerHTML = "";
    const message = failure instanceof Error ? failure.message : String(failure);
    content.appendChild(errorBanner(`API request failed: ${message}.`));
  }
}

for (const button of document.querySelectorAll<HTMLButtonElement>("nav button[data-view]")) {
  button.addEventListener("click", () => dispatch(setView(state, button.dataset.view as ViewName)));
}
document.getElementById("about-button")?.addEventListener("click", () => {
  dispatch(toggleAbout(state));
});

void render();
