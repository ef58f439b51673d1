// Scripted stand-in for a human running trials in the browser: drives the
// live session service through the same client the UI uses, then checks the
// exported log against the core toolkit's own recomputation (cmd_metrics)
// and the decoder CLI. Skips itself when no service is reachable.

import { execFileSync } from "node:child_process"
import { mkdtempSync, writeFileSync } from "node:fs"
import { tmpdir } from "node:os"
import { join } from "node:path"
import { describe, expect, it } from "vitest"

import { ApiClient, LayoutDoc } from "../src/api.js"

const BASE = process.env.THUMBTYPE_SERVICE ?? "http://127.0.0.1:8077"

async function serviceUp(): Promise<boolean> {
    try {
        const r = await fetch(`${BASE}/api/layout`)
        return r.ok
    } catch {
        return false
    }
}

function centers(layout: LayoutDoc): Map<string, [number, number]> {
    return new Map(layout.keys.map((k) => [k.label, k.center]))
}

const up = await serviceUp()

describe.skipIf(!up)("service round trip", () => {
    it("three transcribed phrases export and recompute to the shown values", async () => {
        const api = new ApiClient(BASE)
        const layout = await api.layout()
        const keys = centers(layout)
        const { session_id } = await api.openSession("roundtrip")

        const shown: { wpm: number; uer: number }[] = []
        let clock = 0
        for (let trial = 0; trial < 3; trial++) {
            const state = await api.showPhrase(session_id)
            const phrase = state.phrase
            expect(phrase).toBeTruthy()
            for (const ch of phrase as string) {
                clock += 250
                const body =
                    ch === " "
                        ? { t_down: clock, t_up: clock + 90, label: "space" }
                        : { t_down: clock, t_up: clock + 90, touch: keys.get(ch)! }
                const resp = await api.postEvent(session_id, body)
                expect(resp.registered).toBe(ch === " " ? "space" : ch)
            }
            clock += 250
            const result = await api.submit(session_id, clock, clock + 90)
            expect(result.transcribed).toBe(result.presented)
            expect(result.report.uer_pct).toBe(0)
            shown.push({ wpm: result.report.wpm, uer: result.report.uer_pct })
        }

        const exported = await api.exportLog(session_id)
        const dir = mkdtempSync(join(tmpdir(), "thumbtype-ui-"))
        writeFileSync(join(dir, "session.jsonl"), exported)
        const csv = execFileSync("python3", ["-m", "thumbtype", "metrics", dir, "--csv"], {
            encoding: "utf-8",
        })
        const wpmRow = csv.split("\n").find((l) => l.includes(",wpm,"))
        expect(wpmRow).toBeTruthy()
        const recomputedMean = Number(wpmRow!.split(",")[2])
        const shownMean = shown.reduce((s, t) => s + t.wpm, 0) / shown.length
        expect(Math.abs(recomputedMean - shownMean)).toBeLessThanOrEqual(0.1)
        for (const t of shown) {
            expect(Math.abs(t.uer - 0)).toBeLessThanOrEqual(0.1)
        }
    }, 30000)

    it("suggestions after taps t,h match the decode command", async () => {
        const api = new ApiClient(BASE)
        const layout = await api.layout()
        const keys = centers(layout)
        const { session_id } = await api.openSession("parity")
        await api.showPhrase(session_id)
        let clock = 0
        for (const ch of "th") {
            clock += 300
            await api.postEvent(session_id, {
                t_down: clock,
                t_up: clock + 80,
                touch: keys.get(ch)!,
            })
        }
        const state = await api.state(session_id)
        expect(state.suggestions.length).toBeGreaterThan(0)

        const dir = mkdtempSync(join(tmpdir(), "thumbtype-taps-"))
        const tapFile = join(dir, "taps.txt")
        const [tx, ty] = keys.get("t")!
        const [hx, hy] = keys.get("h")!
        writeFileSync(tapFile, `${tx} ${ty}\n${hx} ${hy}\n`)
        const out = execFileSync(
            "python3",
            ["-m", "thumbtype", "decode", tapFile, "--layout", layout.name],
            { encoding: "utf-8" },
        )
        const first = out.match(/first: (\S+)\s+(\S+)/)
        expect(first).toBeTruthy()
        expect(first![1]).toBe(state.suggestions[0].word)
        expect(Number(first![2])).toBeCloseTo(state.suggestions[0].score, 9)
    }, 30000)
})

describe.skipIf(up)("service offline", () => {
    it("skips the round trip (start `thumbtype serve` to enable it)", () => {
        expect(up).toBe(false)
    })
})
