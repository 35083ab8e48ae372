// Face state: the pure model the renderer draws each frame.  Messages
// mutate state; rendering never does.  Sided action units store left and
// right separately; setting "both" overwrites both halves.

import { EyeModel } from "./eyes.js";
import {
  ActionUnitSetting,
  BridgeMessage,
  FaceConfigPayload,
  Payload,
  SUPPORTED_AUS,
  Viseme,
} from "./protocol.js";

export interface Appearance {
  colors: Record<string, string>;
  pupilShape: string;
  elementSizes: Record<string, number>;
}

export const DEFAULT_APPEARANCE: Appearance = {
  colors: {
    skin: "#ffe3b3",
    sclera: "#ffffff",
    iris: "#3a6ea5",
    pupil: "#111111",
    mouth: "#a0402a",
    brow: "#5b4632",
  },
  pupilShape: "round",
  elementSizes: {},
};

export interface PlatformPose {
  pose: [number, number, number, number, number, number];
  t: number;
}

export class FaceState {
  eyes: EyeModel;
  viseme: Viseme = "sil";
  previousViseme: Viseme = "sil";
  visemeChangedAt = 0; // ms timestamp for the mouth cross-fade
  aus: Map<string, number> = new Map(); // "12:left" -> intensity
  appearance: Appearance = structuredClone(DEFAULT_APPEARANCE);
  audioDuration = 0;
  platform: PlatformPose | null = null;
  lastSeq = 0;

  constructor(eyes?: EyeModel) {
    this.eyes = eyes ?? new EyeModel();
  }

  au(id: number, side: "left" | "right"): number {
    return this.aus.get(`${id}:${side}`) ?? 0;
  }

  private setAu(setting: ActionUnitSetting): void {
    const sides: Array<"left" | "right"> =
      setting.side === "both" ? ["left", "right"] : [setting.side];
    for (const side of sides) {
      this.aus.set(`${setting.au}:${side}`, setting.intensity);
    }
  }

  private applyConfig(config: FaceConfigPayload): void {
    if (config.colors) {
      this.appearance.colors = { ...this.appearance.colors, ...config.colors };
    }
    if (config.pupil_shape !== undefined) {
      this.appearance.pupilShape = config.pupil_shape;
    }
    if (config.element_sizes) {
      this.appearance.elementSizes = {
        ...this.appearance.elementSizes,
        ...config.element_sizes,
      };
    }
  }

  /** Apply one validated bridge message; now_ms drives the mouth fade. */
  apply(msg: BridgeMessage, now_ms = 0): void {
    this.lastSeq = msg.seq;
    this.applyPayload(msg.payload, now_ms);
  }

  applyPayload(payload: Payload, now_ms = 0): void {
    switch (payload.type) {
      case "viseme":
        if (payload.symbol !== this.viseme) {
          this.previousViseme = this.viseme;
          this.viseme = payload.symbol;
          this.visemeChangedAt = now_ms;
        }
        break;
      case "action_units":
        if (payload.units.length === 0) {
          this.aus.clear();
        }
        for (const unit of payload.units) this.setAu(unit);
        break;
      case "gaze":
        this.eyes.setGaze({ x: payload.point[0], y: payload.point[1], z: payload.point[2] });
        break;
      case "look_reset":
        this.eyes.reset();
        break;
      case "face_config":
        this.applyConfig(payload.config);
        break;
      case "audio":
        this.audioDuration = payload.duration;
        break;
      case "pose":
        this.platform = {
          pose: payload.pose as [number, number, number, number, number, number],
          t: payload.t,
        };
        break;
    }
  }

  neutral(): void {
    this.viseme = "sil";
    this.aus.clear();
    this.eyes.reset();
  }
}

export function allAuKeys(): string[] {
  const keys: string[] = [];
  for (const au of SUPPORTED_AUS) {
    keys.push(`${au}:left`, `${au}:right`);
  }
  return keys;
}
