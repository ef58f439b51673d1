import { describe, expect, it } from "vitest"

import type { LayoutDoc } from "../src/api.js"
import { boardScale, keyRect, mmToPx, pxToMm } from "../src/scale.js"

const layout: LayoutDoc = {
    name: "mini",
    unit: "mm",
    key_width: 6,
    key_gap: 2,
    row_pitch: 8,
    origin: [0, 0],
    keys: [
        { label: "q", center: [0, 0], width: 6, height: 6 },
        { label: "w", center: [8, 0], width: 6, height: 6 },
        { label: "k", center: [44, 8], width: 6, height: 6 },
    ],
}

describe("boardScale", () => {
    it("covers every key plus the margin", () => {
        const s = boardScale(layout, 8, 2)
        // x spans -3..47 plus 2 mm margins -> 54 mm
        expect(s.widthPx).toBeCloseTo(54 * 8)
        // y spans -3..11 plus margins -> 18 mm
        expect(s.heightPx).toBeCloseTo(18 * 8)
        expect(s.minMm).toEqual({ x: -5, y: -5 })
    })

    it("defaults to 8 px per mm", () => {
        expect(boardScale(layout).pxPerMm).toBe(8)
    })
})

describe("mm/px transforms", () => {
    const s = boardScale(layout, 8, 2)

    it("round-trips exactly at a key center", () => {
        const kPx = mmToPx(s, { x: 44, y: 8 })
        expect(pxToMm(s, kPx)).toEqual({ x: 44, y: 8 })
    })

    it("inverts for arbitrary points", () => {
        for (const p of [{ x: 0, y: 0 }, { x: -3, y: 11 }, { x: 12.25, y: 4.5 }]) {
            const there = mmToPx(s, p)
            const back = pxToMm(s, there)
            expect(back.x).toBeCloseTo(p.x, 10)
            expect(back.y).toBeCloseTo(p.y, 10)
        }
    })

    it("scales distances linearly", () => {
        const a = mmToPx(s, { x: 0, y: 0 })
        const b = mmToPx(s, { x: 8, y: 0 })
        expect(b.x - a.x).toBeCloseTo(64)
    })
})

describe("keyRect", () => {
    it("positions the key's top-left corner", () => {
        const s = boardScale(layout, 8, 2)
        const rect = keyRect(s, layout.keys[0])
        // q spans -3..3 mm; view origin at -5 mm -> 2 mm -> 16 px
        expect(rect.left).toBeCloseTo(16)
        expect(rect.top).toBeCloseTo(16)
        expect(rect.width).toBeCloseTo(48)
        expect(rect.height).toBeCloseTo(48)
    })
})
