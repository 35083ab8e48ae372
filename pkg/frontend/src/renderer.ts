// Canvas face renderer: draws the FaceState every animation frame.
// Mouth shapes are vector paths per viseme with an 80 ms cross-fade;
// action units deform brows, lids, mouth corners and jaw additively.

import { FaceState } from "./face.js";
import { Viseme } from "./protocol.js";

export const MOUTH_FADE_MS = 80;

// (width scale, height scale, openness, corner lift) per viseme
const MOUTH_SHAPES: Record<Viseme, [number, number, number, number]> = {
  sil: [1.0, 0.12, 0.0, 0.0],
  PP: [0.9, 0.08, 0.0, 0.0],
  FF: [1.0, 0.22, 0.15, -0.05],
  TH: [0.95, 0.3, 0.25, 0.0],
  DD: [0.9, 0.35, 0.3, 0.0],
  kk: [0.85, 0.4, 0.35, 0.0],
  CH: [0.8, 0.45, 0.4, 0.0],
  SS: [1.05, 0.2, 0.12, 0.1],
  nn: [0.9, 0.25, 0.18, 0.0],
  RR: [0.85, 0.35, 0.3, 0.0],
  aa: [1.0, 0.7, 0.65, 0.0],
  E: [1.1, 0.45, 0.4, 0.1],
  ih: [1.15, 0.3, 0.25, 0.05],
  oh: [0.6, 0.65, 0.6, 0.0],
  ou: [0.45, 0.5, 0.45, 0.0],
};

function lerp(a: number, b: number, t: number): number {
  return a + (b - a) * t;
}

export function mouthParams(state: FaceState, now_ms: number): [number, number, number, number] {
  const from = MOUTH_SHAPES[state.previousViseme];
  const to = MOUTH_SHAPES[state.viseme];
  const t = Math.min(1, (now_ms - state.visemeChangedAt) / MOUTH_FADE_MS);
  const blended = to.map((v, i) => lerp(from[i] ?? v, v, t)) as [number, number, number, number];
  // AU deformation: 12 lifts corners, 15 pulls them down, 26 drops the jaw
  const smile = (state.au(12, "left") + state.au(12, "right")) / 2;
  const frown = (state.au(15, "left") + state.au(15, "right")) / 2;
  const jaw = (state.au(26, "left") + state.au(26, "right")) / 2;
  blended[3] += smile * 0.5 - frown * 0.45;
  blended[2] = Math.min(1, blended[2] + jaw * 0.5);
  blended[1] = Math.min(1, blended[1] + jaw * 0.3);
  return blended;
}

export function drawFace(ctx: CanvasRenderingContext2D, state: FaceState, now_ms: number): void {
  const { width, height } = ctx.canvas;
  const colors = state.appearance.colors;
  const sizes = state.appearance.elementSizes;
  ctx.clearRect(0, 0, width, height);
  ctx.fillStyle = colors.skin ?? "#ffe3b3";
  ctx.fillRect(0, 0, width, height);

  const cx = width / 2;
  const cy = height / 2;
  const unit = Math.min(width, height);

  // eyes: fixed size per the design (element sizes exclude the eyes)
  const eyeR = unit * 0.11;
  const eyeDx = unit * 0.18;
  const eyeY = cy - unit * 0.12;
  const pupilScale = eyeR / state.eyes.radius;

  for (const side of ["left", "right"] as const) {
    const ex = side === "left" ? cx - eyeDx : cx + eyeDx;
    const lidL = state.au(5, side); // upper lid raiser widens
    const lidC = state.au(7, side); // lid tightener narrows
    const openness = Math.max(0.15, 1 + lidL * 0.3 - lidC * 0.6);

    ctx.fillStyle = colors.sclera ?? "#fff";
    ctx.beginPath();
    ctx.ellipse(ex, eyeY, eyeR, eyeR * openness, 0, 0, Math.PI * 2);
    ctx.fill();

    const offset = state.eyes.pupilOffset(side);
    const px = ex + offset.x * pupilScale;
    const py = eyeY - offset.y * pupilScale; // canvas y is down
    const irisR = eyeR * 0.55;
    ctx.fillStyle = colors.iris ?? "#3a6ea5";
    ctx.beginPath();
    ctx.ellipse(px, py, irisR, irisR * openness, 0, 0, Math.PI * 2);
    ctx.fill();
    ctx.fillStyle = colors.pupil ?? "#111";
    ctx.beginPath();
    const pr = irisR * 0.45;
    if (state.appearance.pupilShape === "slit") {
      ctx.ellipse(px, py, pr * 0.35, pr * 1.4 * openness, 0, 0, Math.PI * 2);
    } else {
      ctx.ellipse(px, py, pr, pr * openness, 0, 0, Math.PI * 2);
    }
    ctx.fill();

    // brow: AU1 inner raise, AU2 outer raise, AU4 lower
    const browScale = sizes.brow_scale ?? 1.0;
    const inner = state.au(1, side) * 0.05 - state.au(4, side) * 0.06;
    const outer = state.au(2, side) * 0.06 - state.au(4, side) * 0.03;
    const sign = side === "left" ? -1 : 1;
    ctx.strokeStyle = colors.brow ?? "#5b4632";
    ctx.lineWidth = unit * 0.018 * browScale;
    ctx.lineCap = "round";
    ctx.beginPath();
    ctx.moveTo(ex - sign * eyeR, eyeY - eyeR * 1.3 - inner * unit);
    ctx.quadraticCurveTo(
      ex,
      eyeY - eyeR * 1.6 - ((inner + outer) / 2) * unit,
      ex + sign * eyeR,
      eyeY - eyeR * 1.3 - outer * unit,
    );
    ctx.stroke();
  }

  // mouth
  const [w, h, open, corner] = mouthParams(state, now_ms);
  const mouthScale = sizes.mouth_scale ?? 1.0;
  const mw = unit * 0.22 * w * mouthScale;
  const mh = unit * 0.16 * h * mouthScale;
  const my = cy + unit * 0.22;
  ctx.fillStyle = colors.mouth ?? "#a0402a";
  ctx.strokeStyle = colors.mouth ?? "#a0402a";
  ctx.lineWidth = unit * 0.015;
  ctx.beginPath();
  if (open > 0.05) {
    ctx.ellipse(cx, my, mw, Math.max(mh, unit * 0.01), 0, 0, Math.PI * 2);
    ctx.fill();
  } else {
    ctx.moveTo(cx - mw, my - corner * unit * 0.08);
    ctx.quadraticCurveTo(cx, my + corner * unit * 0.16, cx + mw, my - corner * unit * 0.08);
    ctx.stroke();
  }
}
