// Force-directed knowledge-graph view with layer toggles.
//
// d3 is loaded as a plain script (dist/vendor/d3.min.js), so it appears
// here as a global. The full graph is fetched once; toggles re-filter
// the cached payload locally and restart the simulation.

import { nodeColor } from "./colors.js";
import { GRAPH_LAYERS, toggleLayer, type GraphLayer, type ViewState } from "./state.js";
import { visibleGraph } from "./viewmodel.js";
import type { GraphPayload } from "./types.js";
import type { Dispatch } from "./table.js";

declare const d3: any;

// layout constants; purely cosmetic
const CHARGE = -180;
const LINK_DISTANCE = 55;
const WIDTH = 1100;
const HEIGHT = 640;

const LAYER_TITLES: Record<GraphLayer, string> = {
  domain: "Domain terms",
  lifecycle: "Lifecycle terms",
  datatype: "Data type terms",
  format: "Format terms",
  tools: "Tools",
  publications: "Publications",
  organizations: "Organizations",
};

export function renderGraph(
  root: HTMLElement,
  payload: GraphPayload,
  state: ViewState,
  dispatch: Dispatch,
): void {
  root.innerHTML = "";

  const toggles = document.createElement("div");
  toggles.className = "layer-toggles";
  for (const layer of GRAPH_LAYERS) {
    const label = document.createElement("label");
    const box = document.createElement("input");
    box.type = "checkbox";
    box.checked = state.layers[layer];
    box.dataset.layer = layer;
    box.addEventListener("change", () => dispatch(toggleLayer(state, layer)));
    label.appendChild(box);
    label.appendChild(document.createTextNode(" " + LAYER_TITLES[layer]));
    toggles.appendChild(label);
  }
  root.appendChild(toggles);

  const view = visibleGraph(payload, state.layers);
  if (view.nodes.length === 0) {
    const empty = document.createElement("p");
    empty.className = "empty-state";
    empty.textContent = "Nothing to show: the catalog is empty or every layer is off.";
    root.appendChild(empty);
    return;
  }

  const svg = d3
    .select(root)
    .append("svg")
    .attr("viewBox", `0 0 ${WIDTH} ${HEIGHT}`)
    .attr("class", "graph-canvas");

  const nodes = view.nodes.map((n) => ({ ...n }));
  const links = view.links.map((l) => ({ ...l }));

  const simulation = d3
    .forceSimulation(nodes)
    .force("link", d3.forceLink(links).id((d: any) => d.id).distance(LINK_DISTANCE))
    .force("charge", d3.forceManyBody().strength(CHARGE))
    .force("center", d3.forceCenter(WIDTH / 2, HEIGHT / 2))
    .force("collide", d3.forceCollide().radius(18));

  const link = svg
    .append("g")
    .selectAll("line")
    .data(links)
    .join("line")
    .attr("class", "graph-link");

  const node = svg
    .append("g")
    .selectAll("g")
    .data(nodes)
    .join("g")
    .attr("class", (d: any) => `graph-node kind-${d.kind}`)
    .call(drag(simulation));

  node.each(function (this: SVGGElement, d: any) {
    const group = d3.select(this);
    const fill = nodeColor(d.kind, d.dimension);
    const size = 7 + Math.min(10, d.degree);
    if (d.kind === "dataset") {
      group
        .append("rect")
        .attr("x", -size * 1.4)
        .attr("y", -size * 0.8)
        .attr("width", size * 2.8)
        .attr("height", size * 1.6)
        .attr("rx", 3)
        .attr("fill", fill);
    } else if (d.kind === "taxonomy_term") {
      group.append("ellipse").attr("rx", size * 1.5).attr("ry", size * 0.9).attr("fill", fill);
    } else if (d.kind === "tool") {
      const s = size * 1.2;
      group
        .append("path")
        .attr("d", `M0 ${-s} L${s} 0 L0 ${s} L${-s} 0 Z`)
        .attr("fill", fill);
    } else {
      group.append("circle").attr("r", size * 0.9).attr("fill", fill);
    }
    group
      .append("text")
      .attr("dy", size + 12)
      .attr("text-anchor", "middle")
      .text(d.label.length > 24 ? d.label.slice(0, 22) + "…" : d.label);
    group.append("title").text(`${d.label} (degree ${d.degree})`);
  });

  simulation.on("tick", () => {
    link
      .attr("x1", (d: any) => d.source.x)
      .attr("y1", (d: any) => d.source.y)
      .attr("x2", (d: any) => d.target.x)
      .attr("y2", (d: any) => d.target.y);
    node.attr("transform", (d: any) => `translate(${d.x},${d.y})`);
  });
}

function drag(simulation: any): any {
  return d3
    .drag()
    .on("start", (event: any, d: any) => {
      if (!event.active) simulation.alphaTarget(0.3).restart();
      d.fx = d.x;
      d.fy = d.y;
    })
    .on("drag", (event: any, d: any) => {
      d.fx = event.x;
      d.fy = event.y;
    })
    .on("end", (event: any, d: any) => {
      if (!event.active) simulation.alphaTarget(0);
      d.fx = null;
      d.fy = null;
    });
}
