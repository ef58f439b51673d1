// Client-side tracking imperfections, so a human can feel what the core
// simulator only book-keeps: bounded positional jitter on outgoing touch
// points and a dispatch delay standing in for tracking latency. Keeping the
// injection client-side leaves the service deterministic.

import type { Point } from "./scale.js"

export interface NoiseSettings {
    jitterMm: number
    latencyMs: number
}

/** Uniform per-axis jitter in [-amplitude, +amplitude] mm. */
export function jitterPoint(
    p: Point,
    amplitudeMm: number,
    rand: () => number = Math.random,
): Point {
    if (amplitudeMm <= 0) {
        return p
    }
    return {
        x: p.x + (rand() * 2 - 1) * amplitudeMm,
        y: p.y + (rand() * 2 - 1) * amplitudeMm,
    }
}

/**
 * Runs tasks after a configurable delay, strictly in push order even when
 * the delay setting changes between pushes. Each browser tap becomes exactly
 * one queued task, so events are never coalesced or reordered.
 */
export class DelayedDispatcher {
    private chain: Promise<unknown> = Promise.resolve()

    constructor(public latencyMs = 0) {}

    push<T>(task: () => Promise<T> | T): Promise<T> {
        const delay = this.latencyMs
        const next = this.chain.then(async () => {
            if (delay > 0) {
                await new Promise((resolve) => setTimeout(resolve, delay))
            }
            return task()
        })
        // keep the chain alive whether or not the task fails
        this.chain = next.catch(() => undefined)
        return next
    }
}
