// Pure view models: API payload + view state in, plain render-ready data
// out. Keeping these free of DOM access makes every displayed number
// traceable to an API value in tests.

import { badgeColor } from "./colors.js";
import type { GraphLayer, ViewState } from "./state.js";
import type {
  DatasetSummary,
  FacetCountsPayload,
  GraphPayload,
  StatsPayload,
  TaxonomyPayload,
} from "./types.js";

export interface Badge {
  id: string;
  label: string;
  dimension: string;
  color: string;
}

export interface TableRow {
  id: string;
  title: string;
  license: string;
  licenseOpen: boolean;
  badges: Badge[];
  selected: boolean;
}

export function tableRows(payload: { datasets: DatasetSummary[] }, state: ViewState): TableRow[] {
  return payload.datasets.map((d) => ({
    id: d.id,
    title: d.title,
    license: d.license,
    licenseOpen: d.license_open,
    badges: d.classifications.map((c) => ({
      id: c.id,
      label: c.label,
      dimension: c.dimension,
      color: badgeColor(c.dimension),
    })),
    selected: state.selectedDataset === d.id,
  }));
}

/** Filter the full graph payload down to the switched-on layers.

    Dataset nodes always stay; taxonomy terms follow their dimension's
    layer; tools/publications/organizations follow theirs. Links survive
    only between visible nodes. */
export function visibleGraph(payload: GraphPayload, layers: Record<GraphLayer, boolean>): GraphPayload {
  const kindLayer: Record<string, GraphLayer> = {
    tool: "tools",
    publication: "publications",
    organization: "organizations",
  };
  const nodes = payload.nodes.filter((n) => {
    if (n.kind === "dataset") return true;
    if (n.kind === "taxonomy_term") {
      return n.dimension !== undefined && layers[n.dimension as GraphLayer];
    }
    return layers[kindLayer[n.kind]];
  });
  const visible = new Set(nodes.map((n) => n.id));
  const links = payload.links.filter((l) => visible.has(l.source) && visible.has(l.target));
  return { nodes, links };
}

export interface DistributionBar {
  id: string;
  label: string;
  count: number;
}

/** Root-term counts of one dimension, straight from /api/facets. */
export function dimensionDistribution(
  taxonomy: TaxonomyPayload,
  counts: FacetCountsPayload,
  dimension: string,
): DistributionBar[] {
  const entries = taxonomy.dimensions[dimension] ?? [];
  return entries
    .filter((t) => t.parent === undefined)
    .map((t) => ({ id: t.id, label: t.label, count: counts.counts[t.id] ?? 0 }));
}

export interface DashboardTotals {
  datasets: number;
  publications: number;
  tools: number;
  organizations: number;
  yearRange: string;
}

export function dashboardTotals(stats: StatsPayload): DashboardTotals {
  return {
    datasets: stats.datasets,
    publications: stats.publications,
    tools: stats.tools,
    organizations: stats.organizations,
    yearRange: stats.year_range ? `${stats.year_range[0]}–${stats.year_range[1]}` : "–",
  };
}

/** Cell shade for the heatmap: 0 stays white, the max gets full strength. */
export function heatmapShade(count: number, maxCount: number): number {
  if (count <= 0 || maxCount <= 0) return 0;
  return 0.15 + 0.85 * (count / maxCount);
}
