/** Scene renderer: turns a scene document into SVG markup.
 *
 * Geometry comes verbatim from the server; the only client-side transform is
 * the pan/zoom affine applied on the root group. Producing markup (rather
 * than drawing imperatively) keeps the renderer testable without a browser.
 */

import { PanZoom } from "./panzoom.js"
import { Scene, SceneNode } from "./types.js"

export const CATEGORY_COLORS: Record<string, string> = {
  architecture: "#8d6e63",
  mountain: "#546e7a",
  river: "#1e88e5",
  grassland: "#7cb342",
  lake: "#00acc1",
}

const FALLBACK_COLOR = "#9e9e9e"
const NODE_RADIUS = 18

export function escapeXml(text: string): string {
  return text
    .replace(/&/g, "&amp;")
    .replace(/</g, "&lt;")
    .replace(/>/g, "&gt;")
    .replace(/"/g, "&quot;")
}

function fmt(v: number): string {
  return v.toFixed(2)
}

function nodeMarkup(node: SceneNode, selected: boolean, arriving: boolean): string {
  const color = CATEGORY_COLORS[node.category] ?? FALLBACK_COLOR
  const classes = ["node", arriving ? "node-new" : "", selected ? "node-selected" : ""]
    .filter(Boolean)
    .join(" ")
  return (
    `<g class="${classes}" data-node-id="${node.id}" data-glyph="${escapeXml(node.glyph)}"` +
    ` transform="translate(${fmt(node.x)}, ${fmt(node.y)})">` +
    `<circle r="${NODE_RADIUS}" fill="${color}" stroke="#37474f"/>` +
    `<text class="label" y="${NODE_RADIUS + 14}" text-anchor="middle">` +
    `${escapeXml(node.word)}</text></g>`
  )
}

export interface RenderOptions {
  selectedNode?: number | null
  newNodes?: number[]
  panZoom?: PanZoom
  width?: number
  height?: number
}

export function renderScene(scene: Scene, options: RenderOptions = {}): string {
  const width = options.width ?? 960
  const height = options.height ?? 640
  const t = options.panZoom ?? { scale: 1, tx: 0, ty: 0 }
  const arriving = new Set(options.newNodes ?? [])

  const header =
    `<svg xmlns="http://www.w3.org/2000/svg" width="${width}" height="${height}">`
  if (scene.nodes.length === 0) {
    return (
      header +
      `<text class="hint" x="${width / 2}" y="${height / 2}" text-anchor="middle">` +
      `Speak or type an utterance to begin the map</text></svg>`
    )
  }

  const byId = new Map(scene.nodes.map((n) => [n.id, n]))
  const routes = scene.edges
    .map((e) => {
      const a = byId.get(e.from)!
      const b = byId.get(e.to)!
      return (
        `<path class="route" data-relation="${escapeXml(e.relation)}"` +
        ` data-similarity="${e.similarity}"` +
        ` d="M ${fmt(a.x)} ${fmt(a.y)} L ${fmt(b.x)} ${fmt(b.y)}"` +
        ` stroke="#90a4ae" fill="none"/>`
      )
    })
    .join("")
  const nodes = scene.nodes
    .map((n) => nodeMarkup(n, n.id === options.selectedNode, arriving.has(n.id)))
    .join("")

  return (
    header +
    `<g class="view" transform="translate(${fmt(t.tx)}, ${fmt(t.ty)}) scale(${t.scale})">` +
    routes +
    nodes +
    `</g></svg>`
  )
}
