// Bridge message protocol: versioned JSON envelopes over the WebSocket.
// Anything that does not validate raises SchemaMismatchError, which the
// client surfaces on screen instead of silently dropping.

export const PROTOCOL_VERSION = 1;

export const VISEMES = [
  "sil", "PP", "FF", "TH", "DD", "kk", "CH", "SS", "nn", "RR",
  "aa", "E", "ih", "oh", "ou",
] as const;
export type Viseme = (typeof VISEMES)[number];

export const SUPPORTED_AUS = [1, 2, 4, 5, 6, 7, 12, 15, 26] as const;
export type AuSide = "left" | "right" | "both";

export interface ActionUnitSetting {
  au: number;
  side: AuSide;
  intensity: number;
}

export interface FaceConfigPayload {
  colors?: Record<string, string>;
  pupil_shape?: string;
  element_sizes?: Record<string, number>;
}

export type Payload =
  | { type: "viseme"; symbol: Viseme }
  | { type: "action_units"; units: ActionUnitSetting[] }
  | { type: "gaze"; point: [number, number, number] }
  | { type: "look_reset" }
  | { type: "face_config"; config: FaceConfigPayload }
  | { type: "audio"; duration: number; key?: string }
  | { type: "pose"; pose: number[]; t: number };

export interface BridgeMessage {
  v: number;
  robot: string;
  seq: number;
  payload: Payload;
}

export class SchemaMismatchError extends Error {
  constructor(reason: string) {
    super(`schema mismatch: ${reason}`);
    this.name = "SchemaMismatchError";
  }
}

function isFiniteNumber(x: unknown): x is number {
  return typeof x === "number" && Number.isFinite(x);
}

function asPoint(value: unknown, what: string): [number, number, number] {
  if (!Array.isArray(value) || value.length !== 3 || !value.every(isFiniteNumber)) {
    throw new SchemaMismatchError(`${what} must be [x, y, z] numbers`);
  }
  return value as [number, number, number];
}

function parsePayload(type: unknown, raw: Record<string, unknown>): Payload {
  switch (type) {
    case "viseme": {
      const symbol = raw.symbol;
      if (typeof symbol !== "string" || !(VISEMES as readonly string[]).includes(symbol)) {
        throw new SchemaMismatchError(`unknown viseme ${JSON.stringify(symbol)}`);
      }
      return { type, symbol: symbol as Viseme };
    }
    case "action_units": {
      const units = raw.units;
      if (!Array.isArray(units)) throw new SchemaMismatchError("action_units needs units[]");
      const parsed = units.map((u) => {
        const item = u as Record<string, unknown>;
        const au = item.au;
        const side = item.side ?? "both";
        const intensity = item.intensity;
        if (!isFiniteNumber(au) || !(SUPPORTED_AUS as readonly number[]).includes(au)) {
          throw new SchemaMismatchError(`unsupported action unit ${JSON.stringify(au)}`);
        }
        if (side !== "left" && side !== "right" && side !== "both") {
          throw new SchemaMismatchError(`bad side ${JSON.stringify(side)}`);
        }
        if (!isFiniteNumber(intensity) || intensity < 0 || intensity > 1) {
          throw new SchemaMismatchError(`intensity out of range: ${JSON.stringify(intensity)}`);
        }
        return { au, side, intensity } as ActionUnitSetting;
      });
      return { type, units: parsed };
    }
    case "gaze":
      return { type, point: asPoint(raw.point, "gaze point") };
    case "look_reset":
      return { type };
    case "face_config": {
      const config = raw.config;
      if (typeof config !== "object" || config === null || Array.isArray(config)) {
        throw new SchemaMismatchError("face_config needs a config object");
      }
      const allowed = new Set(["colors", "pupil_shape", "element_sizes"]);
      for (const key of Object.keys(config)) {
        if (!allowed.has(key)) throw new SchemaMismatchError(`unknown face_config key ${key}`);
      }
      return { type, config: config as FaceConfigPayload };
    }
    case "audio": {
      const duration = raw.duration;
      if (!isFiniteNumber(duration) || duration < 0) {
        throw new SchemaMismatchError("audio needs duration >= 0");
      }
      const key = raw.key;
      if (key !== undefined && typeof key !== "string") {
        throw new SchemaMismatchError("audio key must be a string");
      }
      return { type, duration, key: key as string | undefined };
    }
    case "pose": {
      const pose = raw.pose;
      const t = raw.t;
      if (!Array.isArray(pose) || pose.length !== 6 || !pose.every(isFiniteNumber)) {
        throw new SchemaMismatchError("pose needs six numbers");
      }
      if (!isFiniteNumber(t)) throw new SchemaMismatchError("pose needs timestamp t");
      return { type, pose: pose as number[], t };
    }
    default:
      throw new SchemaMismatchError(`unknown message type ${JSON.stringify(type)}`);
  }
}

export function parseMessage(text: string): BridgeMessage {
  let doc: unknown;
  try {
    doc = JSON.parse(text);
  } catch {
    throw new SchemaMismatchError("not valid JSON");
  }
  if (typeof doc !== "object" || doc === null) throw new SchemaMismatchError("not an object");
  const msg = doc as Record<string, unknown>;
  if (msg.v !== PROTOCOL_VERSION) {
    throw new SchemaMismatchError(`unsupported version ${JSON.stringify(msg.v)}`);
  }
  if (typeof msg.robot !== "string" || !isFiniteNumber(msg.seq)) {
    throw new SchemaMismatchError("missing robot/seq");
  }
  const payloadRaw = msg.payload;
  if (typeof payloadRaw !== "object" || payloadRaw === null) {
    throw new SchemaMismatchError("missing payload");
  }
  return {
    v: msg.v,
    robot: msg.robot,
    seq: msg.seq,
    payload: parsePayload(msg.type, payloadRaw as Record<string, unknown>),
  };
}
