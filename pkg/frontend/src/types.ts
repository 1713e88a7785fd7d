// Payload shapes of the catalog HTTP API.

export interface ClassificationBadge {
  id: string;
  label: string;
  dimension: string;
}

export interface QualityScores {
  completeness: number;
  fair_f: number;
  fair_a: number;
  fair_i: number;
  fair_r: number;
  scoring_version: number;
}

export interface DatasetSummary {
  id: string;
  title: string;
  description: string;
  license: string;
  license_open: boolean;
  doi: string | null;
  source_url: string;
  classifications: ClassificationBadge[];
  quality: QualityScores | null;
}

export interface NodeRef {
  id: string;
  kind: string;
  label: string;
}

export interface DatasetDetail {
  id: string;
  title: string;
  description: string;
  source_url: string;
  license: string;
  license_open: boolean;
  doi?: string;
  size_description: string;
  temporal_coverage?: [number, number];
  scholar_url: string;
  quality: QualityScores | null;
  classifications: ClassificationBadge[];
  neighbors: {
    outgoing: Record<string, NodeRef[]>;
    incoming: Record<string, NodeRef[]>;
  };
}

export interface DatasetsPayload {
  total: number;
  datasets: DatasetSummary[];
}

export interface StatsPayload {
  datasets: number;
  publications: number;
  tools: number;
  organizations: number;
  year_range: [number, number] | null;
}

export interface TaxonomyTermEntry {
  id: string;
  label: string;
  parent?: string;
}

export interface TaxonomyPayload {
  dimensions: Record<string, TaxonomyTermEntry[]>;
}

export interface FacetCountsPayload {
  counts: Record<string, number>;
}

export interface GraphNode {
  id: string;
  kind: string;
  label: string;
  degree: number;
  dimension?: string;
}

export interface GraphLink {
  source: string;
  target: string;
  kind: string;
}

export interface GraphPayload {
  nodes: GraphNode[];
  links: GraphLink[];
}

export interface HeatmapPayload {
  row_dimension: string;
  col_dimension: string;
  rows: string[];
  cols: string[];
  row_labels: string[];
  col_labels: string[];
  cells: number[][];
  cell_labels: string[][];
}

export interface ApiError {
  error: {
    code: string;
    message: string;
    position?: { line: number; column: number };
  };
}
