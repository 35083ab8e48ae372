// Schematic platform preview: top and side views of the simulated
// Stewart platform at the streamed pose, with angle/offset readouts, so
// clip authors see the body and face together.

import { PlatformPose } from "./face.js";

const BASE_RADIUS = 0.09; // drawing scale only; matches the default geometry
const PLATFORM_RADIUS = 0.06;

export function drawPreview(
  ctx: CanvasRenderingContext2D,
  platform: PlatformPose | null,
): void {
  const { width, height } = ctx.canvas;
  ctx.clearRect(0, 0, width, height);
  ctx.fillStyle = "#f4f4f8";
  ctx.fillRect(0, 0, width, height);
  ctx.strokeStyle = "#888";
  ctx.fillStyle = "#888";
  ctx.font = `${Math.round(height * 0.07)}px monospace`;

  const [x, y, z, roll, pitch, yaw] = platform?.pose ?? [0, 0, 0, 0, 0, 0];
  const scale = (Math.min(width / 2, height) * 0.35) / BASE_RADIUS;

  // top view (left half): yaw + xy offset
  const tx = width * 0.25;
  const ty = height * 0.52;
  ctx.strokeStyle = "#aaa";
  ctx.beginPath();
  ctx.arc(tx, ty, BASE_RADIUS * scale, 0, Math.PI * 2);
  ctx.stroke();
  ctx.save();
  ctx.translate(tx + x * scale, ty - y * scale);
  ctx.rotate(-yaw);
  ctx.strokeStyle = "#2563eb";
  ctx.lineWidth = 2;
  ctx.beginPath();
  for (let k = 0; k <= 6; k++) {
    const a = (Math.PI / 3) * k + Math.PI / 6;
    const px = Math.cos(a) * PLATFORM_RADIUS * scale;
    const py = Math.sin(a) * PLATFORM_RADIUS * scale;
    if (k === 0) ctx.moveTo(px, py);
    else ctx.lineTo(px, py);
  }
  ctx.stroke();
  ctx.beginPath();
  ctx.moveTo(0, 0);
  ctx.lineTo(0, -PLATFORM_RADIUS * scale);
  ctx.stroke();
  ctx.restore();
  ctx.fillText("top", tx - 14, height * 0.1);

  // side view (right half): height + tilt
  const sx = width * 0.75;
  const sy = height * 0.62;
  const homeRise = height * 0.28;
  ctx.strokeStyle = "#aaa";
  ctx.beginPath();
  ctx.moveTo(sx - BASE_RADIUS * scale, sy);
  ctx.lineTo(sx + BASE_RADIUS * scale, sy);
  ctx.stroke();
  const tilt = Math.acos(
    Math.min(1, Math.max(-1, Math.cos(roll) * Math.cos(pitch))),
  );
  ctx.save();
  ctx.translate(sx + x * scale, sy - homeRise - z * scale);
  ctx.rotate(-(pitch !== 0 ? pitch : roll));
  ctx.strokeStyle = "#2563eb";
  ctx.lineWidth = 4;
  ctx.beginPath();
  ctx.moveTo(-PLATFORM_RADIUS * scale, 0);
  ctx.lineTo(PLATFORM_RADIUS * scale, 0);
  ctx.stroke();
  ctx.restore();
  ctx.fillText("side", sx - 18, height * 0.1);

  const deg = (a: number) => ((a * 180) / Math.PI).toFixed(1);
  ctx.fillStyle = "#333";
  ctx.fillText(
    `z=${(z * 100).toFixed(1)}cm tilt=${deg(tilt)}° yaw=${deg(yaw)}°`,
    width * 0.05,
    height * 0.95,
  );
}
