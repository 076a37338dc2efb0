/** Thin typed client for the engine's HTTP session API. */

import { MutationResponse, Scene, parseScene } from "./types.js"

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly kind: string,
    detail: string,
  ) {
    super(`${kind}: ${detail}`)
  }
}

export interface ConfigDelta {
  quotas?: Record<string, number>
  tau_low?: number
  tau_high?: number
  seed?: number
  keyword_limit?: number
}

async function raiseApiError(resp: Response): Promise<never> {
  let kind = "error"
  let detail = resp.statusText
  try {
    const body = (await resp.json()) as { error?: string; detail?: string }
    if (body.error) kind = body.error
    if (body.detail) detail = body.detail
  } catch {
    // non-JSON error body; keep the status text
  }
  throw new ApiError(resp.status, kind, detail)
}

export class ApiClient {
  constructor(
    private readonly baseUrl: string,
    private readonly fetchImpl: FetchLike = (...args) => fetch(...args),
  ) {}

  private async request(method: string, path: string, body?: unknown): Promise<unknown> {
    const init: RequestInit = { method, headers: { "content-type": "application/json" } }
    if (body !== undefined) init.body = JSON.stringify(body)
    const resp = await this.fetchImpl(this.baseUrl + path, init)
    if (!resp.ok) await raiseApiError(resp)
    return resp.json()
  }

  private parseMutation(raw: unknown): MutationResponse {
    const doc = raw as { new_nodes?: unknown; scene?: unknown }
    if (!Array.isArray(doc.new_nodes)) {
      throw new Error("response is missing new_nodes")
    }
    return { new_nodes: doc.new_nodes as number[], scene: parseScene(doc.scene) }
  }

  async createSession(): Promise<string> {
    const doc = (await this.request("POST", "/sessions")) as { id?: unknown }
    if (typeof doc.id !== "string") throw new Error("response is missing session id")
    return doc.id
  }

  async submitUtterance(sessionId: string, text: string): Promise<MutationResponse> {
    const raw = await this.request("POST", `/sessions/${sessionId}/utterance`, { text })
    return this.parseMutation(raw)
  }

  async expandNode(
    sessionId: string,
    nodeId: number,
    count?: number,
  ): Promise<MutationResponse> {
    const body: { node_id: number; count?: number } = { node_id: nodeId }
    if (count !== undefined) body.count = count
    const raw = await this.request("POST", `/sessions/${sessionId}/expand`, body)
    return this.parseMutation(raw)
  }

  async patchConfig(sessionId: string, delta: ConfigDelta): Promise<unknown> {
    return this.request("PATCH", `/sessions/${sessionId}/config`, delta)
  }

  async getScene(sessionId: string): Promise<Scene> {
    return parseScene(await this.request("GET", `/sessions/${sessionId}/scene`))
  }
}
