// Typed client for the session service. All decoding and metric truth lives
// server-side; this module only moves JSON.

export interface KeyDoc {
    label: string
    center: [number, number]
    width: number
    height: number
}

export interface LayoutDoc {
    name: string
    unit: string
    key_width: number
    key_gap: number
    row_pitch: number
    origin: [number, number]
    keys: KeyDoc[]
}

export interface SuggestionDoc {
    word: string
    score: number
}

export interface StateDoc {
    phase: "preparation" | "phrase_shown" | "transcribing" | "submitted"
    phrase: string | null
    committed: string
    suggestions: SuggestionDoc[]
    backspaces: number
    trials_completed: number
    trials_remaining: number
}

export interface EventResponse extends StateDoc {
    registered: string
    kind: string
}

export interface TrialReport {
    wpm: number
    uer_pct: number
    cer_pct: number
    backspace_count: number
    mean_iki_ms: number
    mean_kpd_ms: number
    char_count: number
    duration_ms: number
}

export interface SubmitResponse extends StateDoc {
    presented: string
    transcribed: string
    report: TrialReport
}

export interface TapEventBody {
    t_down: number
    t_up: number
    label?: string | null
    touch?: [number, number] | null
}

export class ApiError extends Error {
    constructor(readonly status: number, detail: string) {
        super(detail)
    }
}

async function request<T>(url: string, init?: RequestInit): Promise<T> {
    let response: Response
    try {
        response = await fetch(url, init)
    } catch (err) {
        throw new ApiError(0, `service unreachable: ${String(err)}`)
    }
    if (!response.ok) {
        let detail = `${response.status}`
        try {
            const body = await response.json()
            detail = typeof body.detail === "string" ? body.detail : JSON.stringify(body)
        } catch {
            // keep the status text
        }
        throw new ApiError(response.status, detail)
    }
    return (await response.json()) as T
}

function post<T>(url: string, body: unknown): Promise<T> {
    return request<T>(url, {
        method: "POST",
        headers: { "content-type": "application/json" },
        body: JSON.stringify(body ?? {}),
    })
}

export class ApiClient {
    constructor(readonly base: string = "") {}

    layout(): Promise<LayoutDoc> {
        return request(`${this.base}/api/layout`)
    }

    openSession(condition = "ui"): Promise<StateDoc & { session_id: string }> {
        return post(`${this.base}/api/sessions`, { condition })
    }

    state(id: string): Promise<StateDoc> {
        return request(`${this.base}/api/sessions/${id}`)
    }

    showPhrase(id: string): Promise<StateDoc> {
        return post(`${this.base}/api/sessions/${id}/phrase`, {})
    }

    postEvent(id: string, event: TapEventBody): Promise<EventResponse> {
        return post(`${this.base}/api/sessions/${id}/events`, event)
    }

    submit(id: string, tDown: number, tUp: number): Promise<SubmitResponse> {
        return post(`${this.base}/api/sessions/${id}/submit`, { t_down: tDown, t_up: tUp })
    }

    metrics(id: string): Promise<{ trials: (TrialReport & { trial: number; presented: string })[] }> {
        return request(`${this.base}/api/sessions/${id}/metrics`)
    }

    async exportLog(id: string): Promise<string> {
        const response = await fetch(`${this.base}/api/sessions/${id}/log`)
        if (!response.ok) {
            throw new ApiError(response.status, await response.text())
        }
        return response.text()
    }
}
