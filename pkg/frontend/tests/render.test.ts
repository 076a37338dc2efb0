import { describe, expect, it } from "vitest"

import { CATEGORY_COLORS, renderScene } from "../src/render.js"
import { Scene } from "../src/types.js"

const twoNodeScene: Scene = {
  nodes: [
    { id: 0, word: "sea", category: "lake", x: 10, y: -4, glyph: "lake_0", depth: 0 },
    { id: 1, word: "see", category: "river", x: 70, y: -4, glyph: "river_1", depth: 1 },
  ],
  edges: [{ from: 0, to: 1, relation: "dada_pun", similarity: 1, target_len: 60 }],
  viewport: { x: 4, y: -10, w: 72, h: 12 },
}

function count(haystack: string, needle: string): number {
  return haystack.split(needle).length - 1
}

describe("renderScene", () => {
  it("renders a hint for the empty scene", () => {
    const svg = renderScene({ nodes: [], edges: [], viewport: { x: 0, y: 0, w: 0, h: 0 } })
    expect(svg).toContain('class="hint"')
    expect(svg).not.toContain('class="node"')
  })

  it("renders one glyph per node and one route per edge", () => {
    const svg = renderScene(twoNodeScene)
    expect(count(svg, "data-node-id=")).toBe(2)
    expect(count(svg, 'class="route"')).toBe(1)
  })

  it("places nodes at the server's coordinates verbatim", () => {
    const svg = renderScene(twoNodeScene)
    expect(svg).toContain('transform="translate(10.00, -4.00)"')
    expect(svg).toContain('transform="translate(70.00, -4.00)"')
    expect(svg).toContain("M 10.00 -4.00 L 70.00 -4.00")
  })

  it("keys colors by category", () => {
    const svg = renderScene(twoNodeScene)
    expect(svg).toContain(CATEGORY_COLORS["lake"]!)
    expect(svg).toContain(CATEGORY_COLORS["river"]!)
  })

  it("carries relation and similarity verbatim from the payload", () => {
    const svg = renderScene(twoNodeScene)
    expect(svg).toContain('data-relation="dada_pun"')
    expect(svg).toContain('data-similarity="1"')
  })

  it("marks selected and newly arrived nodes", () => {
    const svg = renderScene(twoNodeScene, { selectedNode: 0, newNodes: [1] })
    expect(svg).toContain("node-selected")
    expect(svg).toContain("node-new")
  })

  it("applies the pan/zoom transform on the root group only", () => {
    const svg = renderScene(twoNodeScene, { panZoom: { scale: 2, tx: 30, ty: 10 } })
    expect(svg).toContain('transform="translate(30.00, 10.00) scale(2)"')
    // node-local coordinates are untouched
    expect(svg).toContain('transform="translate(10.00, -4.00)"')
  })

  it("escapes markup in words", () => {
    const scene: Scene = {
      ...twoNodeScene,
      nodes: [{ ...twoNodeScene.nodes[0]!, word: "a<b&c" }],
      edges: [],
    }
    const svg = renderScene(scene)
    expect(svg).toContain("a&lt;b&amp;c")
    expect(svg).not.toContain("a<b&c")
  })
})
