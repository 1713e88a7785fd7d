// The single source of truth for badge/node colors and node shapes.
// No view defines its own; everything imports from here.

export const DIMENSION_COLORS: Record<string, string> = {
  domain: "#0d9488", // teal
  lifecycle: "#ea580c", // orange
  datatype: "#2563eb", // blue
  format: "#9333ea", // purple
};

export const TOOL_COLOR = "#f59e0b"; // amber

export const NEUTRAL_NODE_COLOR = "#64748b"; // publications, organizations

export const DATASET_NODE_COLOR = "#1e293b";

export type NodeShape = "rect" | "ellipse" | "diamond" | "circle";

export const NODE_SHAPES: Record<string, NodeShape> = {
  dataset: "rect",
  taxonomy_term: "ellipse",
  tool: "diamond",
  publication: "circle",
  organization: "circle",
};

export function badgeColor(dimension: string): string {
  const color = DIMENSION_COLORS[dimension];
  if (!color) {
    throw new Error(`no badge color for dimension '${dimension}'`);
  }
  return color;
}

export function nodeColor(kind: string, dimension?: string): string {
  if (kind === "taxonomy_term" && dimension) return badgeColor(dimension);
  if (kind === "tool") return TOOL_COLOR;
  if (kind === "dataset") return DATASET_NODE_COLOR;
  return NEUTRAL_NODE_COLOR;
}
