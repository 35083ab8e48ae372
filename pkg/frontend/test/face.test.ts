import { describe, expect, it } from "vitest";

import { BridgeClient } from "../src/client.js";
import { FaceState } from "../src/face.js";
import { mouthParams, MOUTH_FADE_MS } from "../src/renderer.js";
import { SchemaMismatchError } from "../src/protocol.js";

function msg(type: string, payload: Record<string, unknown>, seq = 1): string {
  return JSON.stringify({ v: 1, robot: "t", seq, type, payload });
}

describe("face state", () => {
  it("viseme message swaps the mouth shape", () => {
    const state = new FaceState();
    state.applyPayload({ type: "viseme", symbol: "aa" }, 100);
    expect(state.viseme).toBe("aa");
    expect(state.previousViseme).toBe("sil");
    expect(state.visemeChangedAt).toBe(100);
  });

  it("mouth cross-fades over 80ms", () => {
    const state = new FaceState();
    state.applyPayload({ type: "viseme", symbol: "aa" }, 0);
    const atStart = mouthParams(state, 0);
    const atMid = mouthParams(state, MOUTH_FADE_MS / 2);
    const atEnd = mouthParams(state, MOUTH_FADE_MS);
    expect(atStart[2]).toBeCloseTo(0, 5); // still the sil openness
    expect(atMid[2]).toBeGreaterThan(atStart[2]);
    expect(atEnd[2]).toBeGreaterThan(atMid[2]);
  });

  it("sided action units affect one half only", () => {
    const state = new FaceState();
    state.applyPayload({ type: "action_units", units: [{ au: 2, side: "left", intensity: 0.9 }] });
    expect(state.au(2, "left")).toBe(0.9);
    expect(state.au(2, "right")).toBe(0);
    state.applyPayload({ type: "action_units", units: [{ au: 2, side: "both", intensity: 0.2 }] });
    expect(state.au(2, "left")).toBe(0.2);
    expect(state.au(2, "right")).toBe(0.2);
  });

  it("face config re-skins without losing expression state", () => {
    const state = new FaceState();
    state.applyPayload({ type: "action_units", units: [{ au: 12, side: "both", intensity: 1 }] });
    state.applyPayload({ type: "face_config", config: { colors: { iris: "#123456" } } });
    expect(state.appearance.colors.iris).toBe("#123456");
    expect(state.au(12, "left")).toBe(1); // smile persists
    expect(state.appearance.colors.skin).toBeTruthy(); // defaults kept
  });

  it("applying the same config twice is idempotent", () => {
    const a = new FaceState();
    const config = {
      colors: { skin: "#222233" },
      pupil_shape: "slit",
      element_sizes: { mouth_scale: 1.4 },
    };
    a.applyPayload({ type: "face_config", config });
    const once = JSON.stringify(a.appearance);
    a.applyPayload({ type: "face_config", config });
    expect(JSON.stringify(a.appearance)).toBe(once);
  });

  it("empty action_units clears every unit", () => {
    const state = new FaceState();
    state.applyPayload({
      type: "action_units",
      units: [
        { au: 12, side: "both", intensity: 1 },
        { au: 4, side: "left", intensity: 0.5 },
      ],
    });
    state.applyPayload({ type: "action_units", units: [] });
    expect(state.au(12, "left")).toBe(0);
    expect(state.au(4, "left")).toBe(0);
  });
});

describe("appearance presets", () => {
  it("every bundled preset validates as a face_config payload", async () => {
    const { readdirSync, readFileSync } = await import("node:fs");
    const { fileURLToPath } = await import("node:url");
    const dir = fileURLToPath(new URL("../presets/", import.meta.url));
    const files = readdirSync(dir).filter((f) => f.endsWith(".json"));
    expect(files.length).toBeGreaterThan(0);
    for (const file of files) {
      const config = JSON.parse(readFileSync(dir + file, "utf-8"));
      const frame = JSON.stringify({ v: 1, robot: "t", seq: 0, type: "face_config", payload: { config } });
      const state = new FaceState();
      const { parseMessage } = await import("../src/protocol.js");
      expect(() => state.apply(parseMessage(frame))).not.toThrow();
    }
  });
});

describe("client queue", () => {
  it("queues valid messages and drains in order", () => {
    const client = new BridgeClient("ws://unused", {});
    expect(client.push(msg("viseme", { symbol: "aa" }, 1))).toBe(true);
    expect(client.push(msg("look_reset", {}, 2))).toBe(true);
    const drained = client.drain();
    expect(drained.map((m) => m.seq)).toEqual([1, 2]);
    expect(client.drain()).toEqual([]);
  });

  it("reports schema mismatches instead of queueing", () => {
    const errors: SchemaMismatchError[] = [];
    const client = new BridgeClient("ws://unused", {
      onSchemaMismatch: (e) => errors.push(e),
    });
    expect(client.push(msg("viseme", { symbol: "nope" }))).toBe(false);
    expect(client.push("not json")).toBe(false);
    expect(errors).toHaveLength(2);
    expect(client.drain()).toEqual([]);
  });
});
