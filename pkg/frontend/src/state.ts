/** Studio view state: the server's latest scene plus interaction flags.
 *
 * The server owns all geometry; this module never moves a node. It enforces
 * the single-flight rule: at most one mutating request at a time, later
 * attempts while pending are ignored.
 */

import { ApiClient, ConfigDelta } from "./api.js"
import { EMPTY_SCENE, Scene } from "./types.js"
import { PanZoom, identityTransform } from "./panzoom.js"

export interface ViewState {
  sessionId: string
  scene: Scene
  selectedNode: number | null
  panZoom: PanZoom
  pending: boolean
  lastError: string | null
  /** ids reported by the last mutation, for arrival animation */
  newNodes: number[]
}

export type StateListener = (state: ViewState) => void

export class Studio {
  private state: ViewState
  private listeners: StateListener[] = []

  constructor(private readonly api: ApiClient, sessionId: string) {
    this.state = {
      sessionId,
      scene: EMPTY_SCENE,
      selectedNode: null,
      panZoom: identityTransform(),
      pending: false,
      lastError: null,
      newNodes: [],
    }
  }

  static async connect(api: ApiClient): Promise<Studio> {
    return new Studio(api, await api.createSession())
  }

  snapshot(): ViewState {
    return { ...this.state, scene: this.state.scene, newNodes: [...this.state.newNodes] }
  }

  subscribe(listener: StateListener): () => void {
    this.listeners.push(listener)
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener)
    }
  }

  private update(patch: Partial<ViewState>): void {
    this.state = { ...this.state, ...patch }
    for (const listener of this.listeners) listener(this.snapshot())
  }

  selectNode(id: number | null): void {
    this.update({ selectedNode: id })
  }

  setPanZoom(panZoom: PanZoom): void {
    this.update({ panZoom })
  }

  /** Run one mutating request under the single-flight rule.
   *  Returns false when another mutation is already pending. */
  private async mutate(
    action: () => Promise<{ new_nodes: number[]; scene: Scene }>,
  ): Promise<boolean> {
    if (this.state.pending) return false
    this.update({ pending: true, lastError: null })
    try {
      const result = await action()
      this.update({ pending: false, scene: result.scene, newNodes: result.new_nodes })
      return true
    } catch (err) {
      // scene untouched on failure; surface the message non-blockingly
      this.update({ pending: false, lastError: String(err) })
      return false
    }
  }

  submitUtterance(text: string): Promise<boolean> {
    return this.mutate(() => this.api.submitUtterance(this.state.sessionId, text))
  }

  clickExpand(nodeId: number, count?: number): Promise<boolean> {
    return this.mutate(() => this.api.expandNode(this.state.sessionId, nodeId, count))
  }

  async patchConfig(delta: ConfigDelta): Promise<boolean> {
    if (this.state.pending) return false
    this.update({ pending: true, lastError: null })
    try {
      await this.api.patchConfig(this.state.sessionId, delta)
      this.update({ pending: false })
      return true
    } catch (err) {
      this.update({ pending: false, lastError: String(err) })
      return false
    }
  }

  /** Non-mutating refresh; may race mutations, last response wins. */
  async refreshScene(): Promise<void> {
    try {
      const scene = await this.api.getScene(this.state.sessionId)
      this.update({ scene })
    } catch (err) {
      this.update({ lastError: String(err) })
    }
  }
}
