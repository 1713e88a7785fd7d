// Thin typed client over the catalog HTTP API. All catalog data the UI
// shows comes through here; nothing is counted or derived client-side
// beyond presentation.

import type {
  DatasetDetail,
  DatasetsPayload,
  FacetCountsPayload,
  GraphPayload,
  HeatmapPayload,
  StatsPayload,
  TaxonomyPayload,
} from "./types.js";
import {
  datasetsRequest,
  facetCountsRequest,
  graphRequest,
  heatmapRequest,
  type ViewState,
} from "./state.js";

export class ApiFailure extends Error {
  constructor(
    public readonly status: number,
    public readonly code: string,
    message: string,
  ) {
    super(message);
  }
}

async function getJson<T>(base: string, path: string): Promise<T> {
  const response = await fetch(base + path);
  if (!response.ok) {
    let code = "http-error";
    let message = `${response.status} on ${path}`;
    try {
      const body = await response.json();
      if (body?.error) {
        code = body.error.code;
        message = body.error.message;
      }
    } catch {
      // non-JSON error body; keep defaults
    }
    throw new ApiFailure(response.status, code, message);
  }
  return (await response.json()) as T;
}

export class AtlasClient {
  constructor(public readonly base: string = "") {}

  stats(): Promise<StatsPayload> {
    return getJson(this.base, "/api/stats");
  }

  taxonomy(): Promise<TaxonomyPayload> {
    return getJson(this.base, "/api/taxonomy");
  }

  datasets(state: ViewState): Promise<DatasetsPayload> {
    return getJson(this.base, datasetsRequest(state));
  }

  datasetDetail(id: string): Promise<DatasetDetail> {
    return getJson(this.base, `/api/datasets/${encodeURIComponent(id)}`);
  }

  facetCounts(state: ViewState): Promise<FacetCountsPayload> {
    return getJson(this.base, facetCountsRequest(state));
  }

  graph(): Promise<GraphPayload> {
    return getJson(this.base, graphRequest());
  }

  heatmap(): Promise<HeatmapPayload> {
    return getJson(this.base, heatmapRequest());
  }
}
