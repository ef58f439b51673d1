import { describe, expect, it } from "vitest"

import { DelayedDispatcher, jitterPoint } from "../src/noise.js"

describe("jitterPoint", () => {
    it("returns the point unchanged at zero amplitude", () => {
        const p = { x: 3, y: -4 }
        expect(jitterPoint(p, 0)).toBe(p)
    })

    it("stays inside the per-axis bound", () => {
        let calls = 0
        const rand = () => {
            calls += 1
            return calls % 2 === 0 ? 0 : 1 // extremes
        }
        const out = jitterPoint({ x: 0, y: 0 }, 1.5, rand)
        expect(Math.abs(out.x)).toBeLessThanOrEqual(1.5)
        expect(Math.abs(out.y)).toBeLessThanOrEqual(1.5)
    })

    it("maps rand() uniformly onto [-a, +a]", () => {
        expect(jitterPoint({ x: 0, y: 0 }, 2, () => 0.5)).toEqual({ x: 0, y: 0 })
        expect(jitterPoint({ x: 1, y: 1 }, 2, () => 1)).toEqual({ x: 3, y: 3 })
        expect(jitterPoint({ x: 1, y: 1 }, 2, () => 0)).toEqual({ x: -1, y: -1 })
    })

    it("covers the bound over many draws", () => {
        let seed = 42
        const rand = () => {
            seed = (seed * 1103515245 + 12345) % 2 ** 31
            return seed / 2 ** 31
        }
        let maxsep = 0
        for (let i = 0; i < 2000; i++) {
            const p = jitterPoint({ x: 0, y: 0 }, 1, rand)
            expect(Math.abs(p.x)).toBeLessThanOrEqual(1)
            expect(Math.abs(p.y)).toBeLessThanOrEqual(1)
            maxsep = Math.max(maxsep, Math.abs(p.x), Math.abs(p.y))
        }
        expect(maxsep).toBeGreaterThan(0.9)
    })
})

describe("DelayedDispatcher", () => {
    it("runs tasks in push order even when the delay changes", async () => {
        const d = new DelayedDispatcher(20)
        const order: number[] = []
        const first = d.push(async () => {
            order.push(1)
        })
        d.latencyMs = 0 // later pushes get a shorter delay but still wait
        const second = d.push(async () => {
            order.push(2)
        })
        await Promise.all([first, second])
        expect(order).toEqual([1, 2])
    })

    it("resolves with the task result", async () => {
        const d = new DelayedDispatcher(0)
        await expect(d.push(() => 7)).resolves.toBe(7)
    })

    it("keeps dispatching after a failed task", async () => {
        const d = new DelayedDispatcher(0)
        await expect(d.push(() => Promise.reject(new Error("boom")))).rejects.toThrow("boom")
        await expect(d.push(() => "ok")).resolves.toBe("ok")
    })

    it("one push produces exactly one execution", async () => {
        const d = new DelayedDispatcher(5)
        let runs = 0
        await d.push(() => {
            runs += 1
        })
        expect(runs).toBe(1)
    })
})
