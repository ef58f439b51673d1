// Millimeter <-> pixel mapping. The keyboard model lives in mm with the
// origin at the center of 'q'; the view shifts everything positive and
// multiplies by pixels-per-mm (8 by default, so the enlarged board is a
// comfortable desktop size).

import type { KeyDoc, LayoutDoc } from "./api.js"

export const DEFAULT_PX_PER_MM = 8

export interface Point {
    x: number
    y: number
}

export interface BoardScale {
    pxPerMm: number
    /** mm coordinate of the view's top-left corner */
    minMm: Point
    widthPx: number
    heightPx: number
}

export function boardScale(
    layout: LayoutDoc,
    pxPerMm: number = DEFAULT_PX_PER_MM,
    marginMm = 2,
): BoardScale {
    let minX = Infinity
    let minY = Infinity
    let maxX = -Infinity
    let maxY = -Infinity
    for (const key of layout.keys) {
        minX = Math.min(minX, key.center[0] - key.width / 2)
        maxX = Math.max(maxX, key.center[0] + key.width / 2)
        minY = Math.min(minY, key.center[1] - key.height / 2)
        maxY = Math.max(maxY, key.center[1] + key.height / 2)
    }
    const minMm = { x: minX - marginMm, y: minY - marginMm }
    return {
        pxPerMm,
        minMm,
        widthPx: (maxX - minX + 2 * marginMm) * pxPerMm,
        heightPx: (maxY - minY + 2 * marginMm) * pxPerMm,
    }
}

export function mmToPx(scale: BoardScale, p: Point): Point {
    return {
        x: (p.x - scale.minMm.x) * scale.pxPerMm,
        y: (p.y - scale.minMm.y) * scale.pxPerMm,
    }
}

export function pxToMm(scale: BoardScale, p: Point): Point {
    return {
        x: p.x / scale.pxPerMm + scale.minMm.x,
        y: p.y / scale.pxPerMm + scale.minMm.y,
    }
}

export interface KeyRectPx {
    label: string
    left: number
    top: number
    width: number
    height: number
}

export function keyRect(scale: BoardScale, key: KeyDoc): KeyRectPx {
    const topLeft = mmToPx(scale, {
        x: key.center[0] - key.width / 2,
        y: key.center[1] - key.height / 2,
    })
    return {
        label: key.label,
        left: topLeft.x,
        top: topLeft.y,
        width: key.width * scale.pxPerMm,
        height: key.height * scale.pxPerMm,
    }
}
