/** Scene document schema as served by the engine's HTTP API. */

export interface SceneNode {
  id: number
  word: string
  category: string
  x: number
  y: number
  glyph: string
  depth: number
}

export interface SceneEdge {
  from: number
  to: number
  relation: string
  similarity: number
  target_len: number
}

export interface Viewport {
  x: number
  y: number
  w: number
  h: number
}

export interface Scene {
  nodes: SceneNode[]
  edges: SceneEdge[]
  viewport: Viewport
}

export interface MutationResponse {
  new_nodes: number[]
  scene: Scene
}

export class SceneSchemaError extends Error {}

function isNumber(v: unknown): v is number {
  return typeof v === "number" && Number.isFinite(v)
}

function isString(v: unknown): v is string {
  return typeof v === "string"
}

/** Validate an untrusted payload against the scene schema. */
export function parseScene(raw: unknown): Scene {
  if (typeof raw !== "object" || raw === null) {
    throw new SceneSchemaError("scene is not an object")
  }
  const doc = raw as Record<string, unknown>
  if (!Array.isArray(doc.nodes) || !Array.isArray(doc.edges)) {
    throw new SceneSchemaError("scene.nodes/scene.edges must be arrays")
  }
  const nodes: SceneNode[] = doc.nodes.map((n, i) => {
    const node = n as Record<string, unknown>
    if (
      !isNumber(node.id) || !isString(node.word) || !isString(node.category) ||
      !isNumber(node.x) || !isNumber(node.y) || !isString(node.glyph) ||
      !isNumber(node.depth)
    ) {
      throw new SceneSchemaError(`malformed node at index ${i}`)
    }
    return {
      id: node.id, word: node.word, category: node.category,
      x: node.x, y: node.y, glyph: node.glyph, depth: node.depth,
    }
  })
  const ids = new Set(nodes.map((n) => n.id))
  const edges: SceneEdge[] = doc.edges.map((e, i) => {
    const edge = e as Record<string, unknown>
    if (
      !isNumber(edge.from) || !isNumber(edge.to) || !isString(edge.relation) ||
      !isNumber(edge.similarity) || !isNumber(edge.target_len)
    ) {
      throw new SceneSchemaError(`malformed edge at index ${i}`)
    }
    if (!ids.has(edge.from) || !ids.has(edge.to)) {
      throw new SceneSchemaError(`edge ${i} references an unknown node`)
    }
    return {
      from: edge.from, to: edge.to, relation: edge.relation,
      similarity: edge.similarity, target_len: edge.target_len,
    }
  })
  const vp = doc.viewport as Record<string, unknown> | undefined
  if (!vp || !isNumber(vp.x) || !isNumber(vp.y) || !isNumber(vp.w) || !isNumber(vp.h)) {
    throw new SceneSchemaError("malformed viewport")
  }
  return { nodes, edges, viewport: { x: vp.x, y: vp.y, w: vp.w, h: vp.h } }
}

export const EMPTY_SCENE: Scene = {
  nodes: [],
  edges: [],
  viewport: { x: 0, y: 0, w: 0, h: 0 },
}
