// Explorer view state and its pure transitions.
//
// Every request the app issues is derived from this state by a pure
// function, so "what would the UI fetch right now" is a plain value you
// can snapshot in tests. The same canonical encoding doubles as the
// deep-linkable URL fragment.

export type ViewName = "dashboard" | "table" | "graph" | "heatmap";

export const DIMENSIONS = ["domain", "lifecycle", "datatype", "format"] as const;

export const GRAPH_LAYERS = [
  "domain",
  "lifecycle",
  "datatype",
  "format",
  "tools",
  "publications",
  "organizations",
] as const;

export type GraphLayer = (typeof GRAPH_LAYERS)[number];

export interface ViewState {
  view: ViewName;
  facets: Record<string, string[]>; // dimension -> selected term ids (sorted)
  text: string;
  selectedDataset: string | null;
  layers: Record<GraphLayer, boolean>;
  aboutOpen: boolean;
}

export function initialState(): ViewState {
  const layers = Object.fromEntries(GRAPH_LAYERS.map((l) => [l, true])) as Record<
    GraphLayer,
    boolean
  >;
  return {
    view: "table",
    facets: {},
    text: "",
    selectedDataset: null,
    layers,
    aboutOpen: false,
  };
}

// -- pure transitions --------------------------------------------------------

export function toggleFacet(state: ViewState, dimension: string, term: string): ViewState {
  const current = state.facets[dimension] ?? [];
  const next = current.includes(term)
    ? current.filter((t) => t !== term)
    : [...current, term].sort();
  const facets = { ...state.facets };
  if (next.length === 0) {
    delete facets[dimension];
  } else {
    facets[dimension] = next;
  }
  return { ...state, facets, selectedDataset: null };
}

export function clearFacets(state: ViewState): ViewState {
  return { ...state, facets: {}, text: "", selectedDataset: null };
}

export function setText(state: ViewState, text: string): ViewState {
  return { ...state, text, selectedDataset: null };
}

export function setView(state: ViewState, view: ViewName): ViewState {
  return { ...state, view };
}

export function selectDataset(state: ViewState, id: string | null): ViewState {
  return { ...state, selectedDataset: id };
}

export function toggleLayer(state: ViewState, layer: GraphLayer): ViewState {
  return { ...state, layers: { ...state.layers, [layer]: !state.layers[layer] } };
}

export function toggleAbout(state: ViewState): ViewState {
  return { ...state, aboutOpen: !state.aboutOpen };
}

// -- request derivation -------------------------------------------------------

/** Canonical `facets=`/`q=` query string shared by /api/datasets and /api/facets. */
export function facetParams(state: ViewState): string {
  const parts: string[] = [];
  const chunks: string[] = [];
  for (const dimension of DIMENSIONS) {
    for (const term of state.facets[dimension] ?? []) {
      chunks.push(`${dimension}:${term}`);
    }
  }
  if (chunks.length > 0) parts.push(`facets=${encodeURIComponent(chunks.join(","))}`);
  if (state.text) parts.push(`q=${encodeURIComponent(state.text)}`);
  return parts.join("&");
}

export function datasetsRequest(state: ViewState): string {
  const params = facetParams(state);
  return params ? `/api/datasets?${params}` : "/api/datasets";
}

export function facetCountsRequest(state: ViewState): string {
  const params = facetParams(state);
  return params ? `/api/facets?${params}` : "/api/facets";
}

export function graphRequest(): string {
  // The graph is fetched once with every layer on; toggles filter locally
  // so flipping one never reloads the page or refetches.
  return `/api/graph?layers=${GRAPH_LAYERS.join(",")}`;
}

export function heatmapRequest(): string {
  return "/api/heatmap?rows=domain&cols=lifecycle";
}

// -- deep links ----------------------------------------------------------------

export function toUrlParams(state: ViewState): string {
  const parts: string[] = [`view=${state.view}`];
  const facets = facetParams(state);
  if (facets) parts.push(facets);
  if (state.selectedDataset) parts.push(`dataset=${encodeURIComponent(state.selectedDataset)}`);
  const hidden = GRAPH_LAYERS.filter((l) => !state.layers[l]);
  if (hidden.length > 0) parts.push(`hide=${hidden.join(",")}`);
  return parts.join("&");
}

export function fromUrlParams(search: string): ViewState {
  const state = initialState();
  const params = new URLSearchParams(search.startsWith("?") ? search.slice(1) : search);
  const view = params.get("view");
  if (view === "dashboard" || view === "table" || view === "graph" || view === "heatmap") {
    state.view = view;
  }
  const facets = params.get("facets");
  if (facets) {
    for (const chunk of facets.split(",")) {
      const [dimension, term] = chunk.split(":", 2);
      if ((DIMENSIONS as readonly string[]).includes(dimension) && term) {
        const current = state.facets[dimension] ?? [];
        if (!current.includes(term)) state.facets[dimension] = [...current, term].sort();
      }
    }
  }
  state.text = params.get("q") ?? "";
  state.selectedDataset = params.get("dataset");
  const hidden = params.get("hide");
  if (hidden) {
    for (const layer of hidden.split(",")) {
      if ((GRAPH_LAYERS as readonly string[]).includes(layer)) {
        state.layers[layer as GraphLayer] = false;
      }
    }
  }
  return state;
}
