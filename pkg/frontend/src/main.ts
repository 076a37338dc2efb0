/** Browser entry point: wires the studio state to the DOM.
 *
 * Expects the markup in index.html: a #canvas host, #utterance text input,
 * #speak button, #error banner, and quota sliders marked with data-channel.
 */

import { ApiClient } from "./api.js"
import { fitRect, pan, zoomAround } from "./panzoom.js"
import { renderScene } from "./render.js"
import { createSpeechCapture, isSpeechSupported } from "./speech.js"
import { Studio } from "./state.js"

export async function startStudio(root: Document, baseUrl = ""): Promise<Studio> {
  const canvas = root.getElementById("canvas")!
  const input = root.getElementById("utterance") as HTMLInputElement
  const form = root.getElementById("utterance-form") as HTMLFormElement
  const speakButton = root.getElementById("speak") as HTMLButtonElement
  const banner = root.getElementById("error")!

  const studio = await Studio.connect(new ApiClient(baseUrl))
  let framed = false

  studio.subscribe((state) => {
    if (!framed && state.scene.nodes.length > 0) {
      studio.setPanZoom(
        fitRect(state.scene.viewport, canvas.clientWidth || 960, canvas.clientHeight || 640),
      )
      framed = true
      return // setPanZoom re-notifies with the framed transform
    }
    canvas.innerHTML = renderScene(state.scene, {
      selectedNode: state.selectedNode,
      newNodes: state.newNodes,
      panZoom: state.panZoom,
      width: canvas.clientWidth || 960,
      height: canvas.clientHeight || 640,
    })
    banner.textContent = state.lastError ?? ""
    banner.classList.toggle("visible", state.lastError !== null)
  })

  form.addEventListener("submit", (event) => {
    event.preventDefault()
    const text = input.value.trim()
    if (text) {
      void studio.submitUtterance(text)
      input.value = ""
    }
  })

  canvas.addEventListener("click", (event) => {
    const group = (event.target as Element).closest("[data-node-id]")
    if (!group) return
    const id = Number(group.getAttribute("data-node-id"))
    studio.selectNode(id)
    void studio.clickExpand(id)
  })

  canvas.addEventListener("wheel", (event) => {
    event.preventDefault()
    const factor = Math.exp(-event.deltaY / 200)
    const state = studio.snapshot()
    studio.setPanZoom(zoomAround(state.panZoom, factor, event.offsetX, event.offsetY))
  })

  let dragging: { x: number; y: number } | null = null
  canvas.addEventListener("pointerdown", (event) => {
    if (!(event.target as Element).closest("[data-node-id]")) {
      dragging = { x: event.clientX, y: event.clientY }
    }
  })
  canvas.addEventListener("pointermove", (event) => {
    if (!dragging) return
    const state = studio.snapshot()
    studio.setPanZoom(
      pan(state.panZoom, event.clientX - dragging.x, event.clientY - dragging.y),
    )
    dragging = { x: event.clientX, y: event.clientY }
  })
  canvas.addEventListener("pointerup", () => {
    dragging = null
  })

  for (const slider of Array.from(root.querySelectorAll<HTMLInputElement>("[data-channel]"))) {
    slider.addEventListener("change", () => {
      const channel = slider.getAttribute("data-channel")!
      void studio.patchConfig({ quotas: { [channel]: Number(slider.value) } })
    })
  }

  if (isSpeechSupported()) {
    const capture = createSpeechCapture(
      (text) => void studio.submitUtterance(text),
      (message) => {
        banner.textContent = `speech: ${message}`
      },
    )
    speakButton.addEventListener("click", () => capture?.start())
  } else {
    speakButton.disabled = true
    speakButton.title = "Speech capture is not available in this browser"
  }

  return studio
}

if (typeof document !== "undefined" && document.getElementById("canvas")) {
  void startStudio(document)
}
