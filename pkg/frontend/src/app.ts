// Trial-loop controller: wires the keyboard view to the session service and
// renders phrase, committed text, suggestions, and per-trial metrics. All
// numbers shown come from service responses.

import { ApiClient, ApiError, StateDoc, SubmitResponse, TrialReport } from "./api.js"
import { eventBody, KeyboardView, LABELED_KEYS, TapIntent } from "./keyboard.js"
import { DelayedDispatcher, jitterPoint } from "./noise.js"
import { boardScale, DEFAULT_PX_PER_MM } from "./scale.js"

function el<T extends HTMLElement>(id: string): T {
    const found = document.getElementById(id)
    if (!found) {
        throw new Error(`missing #${id}`)
    }
    return found as T
}

function fmt(value: number, digits = 1): string {
    return value.toFixed(digits)
}

export class App {
    private api = new ApiClient()
    private dispatcher = new DelayedDispatcher(0)
    private jitterMm = 0
    private keyboard: KeyboardView | null = null
    private sessionId = ""
    private phase: StateDoc["phase"] = "preparation"

    async start(): Promise<void> {
        try {
            const layout = await this.api.layout()
            const opened = await this.api.openSession("ui")
            this.sessionId = opened.session_id
            const scale = boardScale(layout, this.currentPxPerMm())
            const board = el<HTMLDivElement>("board")
            board.innerHTML = ""
            this.keyboard = new KeyboardView(board, layout, scale, (intent) =>
                this.handleTap(intent),
            )
            el<HTMLSpanElement>("layout-name").textContent =
                `${layout.name} (${layout.key_width} mm keys, ${layout.key_gap} mm gaps)`
            this.applyState(opened)
        } catch (err) {
            this.showBanner(err)
            return
        }
        this.wireControls()
    }

    private currentPxPerMm(): number {
        const select = document.getElementById("scale") as HTMLSelectElement | null
        return select ? Number(select.value) : DEFAULT_PX_PER_MM
    }

    private wireControls(): void {
        const jitter = el<HTMLInputElement>("jitter")
        jitter.addEventListener("input", () => {
            this.jitterMm = Number(jitter.value)
            el<HTMLSpanElement>("jitter-value").textContent = `${fmt(this.jitterMm)} mm`
        })
        const latency = el<HTMLInputElement>("latency")
        latency.addEventListener("input", () => {
            this.dispatcher.latencyMs = Number(latency.value)
            el<HTMLSpanElement>("latency-value").textContent = `${latency.value} ms`
        })
        el<HTMLSelectElement>("scale").addEventListener("change", () => {
            void this.start() // rebuild the board at the new scale
        })
        el<HTMLButtonElement>("export").addEventListener("click", () => {
            void this.exportLog()
        })
    }

    private showBanner(err: unknown): void {
        const banner = el<HTMLDivElement>("banner")
        const detail = err instanceof ApiError ? err.message : String(err)
        banner.textContent = `Session service unavailable: ${detail}. Start it with \`thumbtype serve\` and reload.`
        banner.classList.remove("hidden")
    }

    private handleTap(intent: TapIntent): void {
        if (intent.label === "submit") {
            void this.dispatcher.push(() => this.handleSubmitKey(intent))
            return
        }
        // Letter taps get the configured tracking jitter; deliberate button
        // taps (space, backspace, suggestions) stay put.
        const jittered = LABELED_KEYS.has(intent.label)
            ? intent
            : { ...intent, touchMm: jitterPoint(intent.touchMm, this.jitterMm) }
        void this.dispatcher.push(async () => {
            try {
                const state = await this.api.postEvent(this.sessionId, eventBody(jittered))
                this.applyState(state)
            } catch (err) {
                if (!(err instanceof ApiError) || err.status !== 409) {
                    this.showBanner(err)
                }
            }
        })
    }

    private async handleSubmitKey(intent: TapIntent): Promise<void> {
        try {
            if (this.phase === "preparation" || this.phase === "submitted") {
                this.applyState(await this.api.showPhrase(this.sessionId))
            } else if (this.phase === "transcribing") {
                const result = await this.api.submit(this.sessionId, intent.tDown, intent.tUp)
                this.applyState(result)
                this.showReport(result)
                await this.refreshHistory()
            }
            // submitting straight from phrase_shown (nothing typed) is a no-op
        } catch (err) {
            if (!(err instanceof ApiError) || err.status !== 409) {
                this.showBanner(err)
            }
        }
    }

    private applyState(state: StateDoc): void {
        this.phase = state.phase
        el<HTMLDivElement>("phrase").textContent =
            state.phrase ?? "press the show-phrase key to begin"
        const committed = el<HTMLDivElement>("committed")
        committed.textContent = state.committed
        committed.classList.toggle("empty", state.committed === "")
        el<HTMLSpanElement>("backspaces").textContent = String(state.backspaces)
        el<HTMLSpanElement>("phase").textContent = state.phase.replace("_", " ")
        if (this.keyboard) {
            this.keyboard.setSuggestions(state.suggestions)
            this.keyboard.setEnabled(state.phase !== "submitted")
            this.keyboard.setSubmitText(
                state.phase === "preparation"
                    ? "show phrase"
                    : state.phase === "submitted"
                      ? "next phrase"
                      : "submit",
            )
        }
    }

    private showReport(result: SubmitResponse): void {
        const r = result.report
        el<HTMLDivElement>("report").innerHTML = ""
        const rows: [string, string][] = [
            ["speed", `${fmt(r.wpm)} WPM`],
            ["uncorrected errors", `${fmt(r.uer_pct)} %`],
            ["corrected errors", `${fmt(r.cer_pct)} %`],
            ["backspaces", String(r.backspace_count)],
            ["mean inter-key interval", `${fmt(r.mean_iki_ms, 0)} ms`],
            ["mean key press duration", `${fmt(r.mean_kpd_ms, 0)} ms`],
        ]
        for (const [label, value] of rows) {
            const div = document.createElement("div")
            div.className = "report-row"
            div.innerHTML = `<span>${label}</span><strong>${value}</strong>`
            el<HTMLDivElement>("report").appendChild(div)
        }
    }

    private async refreshHistory(): Promise<void> {
        const { trials } = await this.api.metrics(this.sessionId)
        const tbody = el<HTMLTableSectionElement>("history-body")
        tbody.innerHTML = ""
        for (const trial of trials) {
            const row = document.createElement("tr")
            row.innerHTML =
                `<td>${trial.trial}</td><td class="phrase-cell">${trial.presented}</td>` +
                `<td>${fmt(trial.wpm)}</td><td>${fmt(trial.uer_pct)}</td>` +
                `<td>${trial.backspace_count}</td>`
            tbody.appendChild(row)
        }
        el<HTMLTableElement>("history").classList.toggle("hidden", trials.length === 0)
    }

    private async exportLog(): Promise<void> {
        try {
            const text = await this.api.exportLog(this.sessionId)
            const blob = new Blob([text], { type: "application/jsonl" })
            const link = document.createElement("a")
            link.href = URL.createObjectURL(blob)
            link.download = `session-${this.sessionId}.jsonl`
            link.click()
            URL.revokeObjectURL(link.href)
        } catch (err) {
            if (err instanceof ApiError && err.status === 409) {
                el<HTMLDivElement>("report").textContent = "nothing to export yet"
            } else {
                this.showBanner(err)
            }
        }
    }
}
