// Interactive keyboard view: absolutely positioned key buttons at scaled
// millimeter coordinates, hover highlight, pointer-down/up -> one tap.

import type { KeyDoc, LayoutDoc, SuggestionDoc, TapEventBody } from "./api.js"
import { BoardScale, keyRect, Point, pxToMm } from "./scale.js"

// Deliberate button taps carry their label; letter taps go over as bare
// touch points so the service registers them by nearest key center (and
// injected jitter can actually change the outcome).
export const LABELED_KEYS = new Set([
    "space",
    "backspace",
    "submit",
    "suggestion-0",
    "suggestion-1",
])

export interface TapIntent {
    label: string // the key the pointer went down on (UI bookkeeping)
    touchMm: Point // where the tap landed, keyboard-plane mm
    tDown: number
    tUp: number
}

/** Build the service event body for a tap on the given key. */
export function eventBody(intent: TapIntent): TapEventBody {
    const touch: [number, number] = [intent.touchMm.x, intent.touchMm.y]
    if (LABELED_KEYS.has(intent.label)) {
        return { t_down: intent.tDown, t_up: intent.tUp, label: intent.label, touch }
    }
    return { t_down: intent.tDown, t_up: intent.tUp, touch }
}

const KEY_TEXT: Record<string, string> = {
    space: "space",
    backspace: "⌫",
    submit: "submit",
    "suggestion-0": "",
    "suggestion-1": "",
}

export class KeyboardView {
    private buttons = new Map<string, HTMLButtonElement>()
    private press: { label: string; tDown: number } | null = null

    constructor(
        private readonly root: HTMLElement,
        layout: LayoutDoc,
        private readonly scale: BoardScale,
        private readonly onTap: (intent: TapIntent) => void,
    ) {
        root.classList.add("keyboard")
        root.style.width = `${scale.widthPx}px`
        root.style.height = `${scale.heightPx}px`
        for (const key of layout.keys) {
            root.appendChild(this.makeButton(key))
        }
        // a press that slides off the board still completes one tap
        root.addEventListener("pointerup", (ev) => this.finishPress(ev))
        root.addEventListener("pointercancel", () => {
            this.press = null
        })
    }

    private makeButton(key: KeyDoc): HTMLButtonElement {
        const rect = keyRect(this.scale, key)
        const el = document.createElement("button")
        el.type = "button"
        el.className = `key key-${key.label.replace(/[^a-z0-9]/g, "-")}`
        if (key.label.startsWith("suggestion-")) {
            el.classList.add("key-suggestion")
        }
        el.dataset.label = key.label
        el.textContent = KEY_TEXT[key.label] ?? key.label
        el.style.left = `${rect.left}px`
        el.style.top = `${rect.top}px`
        el.style.width = `${rect.width}px`
        el.style.height = `${rect.height}px`
        el.addEventListener("pointerdown", (ev) => {
            ev.preventDefault()
            this.press = { label: key.label, tDown: performance.now() }
            el.classList.add("pressed")
        })
        el.addEventListener("pointerenter", () => el.classList.add("hover"))
        el.addEventListener("pointerleave", () => el.classList.remove("hover"))
        this.buttons.set(key.label, el)
        return el
    }

    private finishPress(ev: PointerEvent): void {
        const press = this.press
        this.press = null
        for (const el of this.buttons.values()) {
            el.classList.remove("pressed")
        }
        if (!press) {
            return
        }
        const bounds = this.root.getBoundingClientRect()
        const touchMm = pxToMm(this.scale, {
            x: ev.clientX - bounds.left,
            y: ev.clientY - bounds.top,
        })
        this.onTap({
            label: press.label,
            touchMm,
            tDown: press.tDown,
            tUp: performance.now(),
        })
    }

    setSuggestions(pair: SuggestionDoc[]): void {
        for (const slot of [0, 1]) {
            const el = this.buttons.get(`suggestion-${slot}`)
            if (!el) {
                continue
            }
            const suggestion = pair[slot]
            el.textContent = suggestion ? suggestion.word : ""
            el.disabled = !suggestion
        }
    }

    setSubmitText(text: string): void {
        const el = this.buttons.get("submit")
        if (el) {
            el.textContent = text
        }
    }

    setEnabled(enabled: boolean): void {
        for (const el of this.buttons.values()) {
            if (el.dataset.label === "submit") {
                continue // submit doubles as the Show Phrase key
            }
            el.disabled = !enabled
        }
        if (enabled) {
            // suggestion buttons re-enable only when they hold a word
            for (const slot of [0, 1]) {
                const el = this.buttons.get(`suggestion-${slot}`)
                if (el) {
                    el.disabled = el.textContent === ""
                }
            }
        }
    }
}
