/** Browser speech capture: recognized text is posted to the same utterance
 * endpoint as typed input, so the server never distinguishes voice from
 * keyboard.
 */

interface RecognitionResultEvent {
  results: ArrayLike<ArrayLike<{ transcript: string }>>
}

interface RecognitionLike {
  lang: string
  continuous: boolean
  interimResults: boolean
  onresult: ((event: RecognitionResultEvent) => void) | null
  onerror: ((event: { error: string }) => void) | null
  onend: (() => void) | null
  start(): void
  stop(): void
}

type RecognitionCtor = new () => RecognitionLike

function recognitionConstructor(scope: unknown): RecognitionCtor | null {
  const w = scope as Record<string, unknown>
  const ctor = w["SpeechRecognition"] ?? w["webkitSpeechRecognition"]
  return typeof ctor === "function" ? (ctor as RecognitionCtor) : null
}

export function isSpeechSupported(scope: unknown = globalThis): boolean {
  return recognitionConstructor(scope) !== null
}

export interface SpeechCapture {
  start(): void
  stop(): void
}

/** Wire up one-shot speech capture; every final transcript is handed to
 * `onTranscript` (typically Studio.submitUtterance). Returns null when the
 * browser has no speech engine — callers fall back to the text box. */
export function createSpeechCapture(
  onTranscript: (text: string) => void,
  onError: (message: string) => void = () => {},
  scope: unknown = globalThis,
  lang = "en-US",
): SpeechCapture | null {
  const Ctor = recognitionConstructor(scope)
  if (!Ctor) return null

  const recognition = new Ctor()
  recognition.lang = lang
  recognition.continuous = false
  recognition.interimResults = false
  recognition.onresult = (event) => {
    const last = event.results[event.results.length - 1]
    const transcript = last?.[0]?.transcript?.trim()
    if (transcript) onTranscript(transcript)
  }
  recognition.onerror = (event) => onError(event.error)

  return {
    start: () => recognition.start(),
    stop: () => recognition.stop(),
  }
}
