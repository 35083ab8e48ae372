// Vergence acceptance: the eye model must converge correctly on midline
// targets, with each eye rotated nasally by exactly atan(w/D).

import { describe, expect, it } from "vitest";

import { EyeModel } from "../src/eyes.js";

describe("vergence", () => {
  it("midline targets from 0.1m to 2m give opposite-sign pupil offsets", () => {
    const eyes = new EyeModel();
    for (let d = 0.1; d <= 2.0; d += 0.05) {
      eyes.setGaze({ x: 0, y: 0, z: d });
      const left = eyes.pupilOffset("left");
      const right = eyes.pupilOffset("right");
      expect(left.x).toBeGreaterThan(0); // left eye rotates toward +x (nasal)
      expect(right.x).toBeLessThan(0);
      expect(Math.sign(left.x)).toBe(-Math.sign(right.x));
    }
  });

  it("each eye rotates nasally by atan(w/D) within 1e-6", () => {
    const eyes = new EyeModel({ interpupillary: 0.06 });
    const w = 0.03;
    for (const d of [0.1, 0.25, 0.5, 1.0, 2.0]) {
      eyes.setGaze({ x: 0, y: 0, z: d });
      const expected = Math.atan(w / d);
      expect(Math.abs(eyes.horizontalAngle("left") - expected)).toBeLessThan(1e-6);
      expect(Math.abs(eyes.horizontalAngle("right") + expected)).toBeLessThan(1e-6);
      expect(Math.abs(eyes.convergenceAngle() - 2 * expected)).toBeLessThan(1e-6);
    }
  });

  it("convergence grows monotonically as the target approaches", () => {
    const eyes = new EyeModel();
    let previous = -Infinity;
    for (let d = 2.0; d >= 0.1; d -= 0.01) {
      eyes.setGaze({ x: 0, y: 0, z: d });
      const angle = eyes.convergenceAngle();
      expect(angle).toBeGreaterThan(previous);
      previous = angle;
    }
  });

  it("far-left targets offset both pupils left with the left eye rotated harder", () => {
    const eyes = new EyeModel();
    eyes.setGaze({ x: -1.5, y: 0, z: 0.8 });
    const left = eyes.pupilOffset("left");
    const right = eyes.pupilOffset("right");
    expect(left.x).toBeLessThan(0);
    expect(right.x).toBeLessThan(0);
    // the eye nearer the target (screen-left) needs the smaller rotation
    expect(Math.abs(eyes.horizontalAngle("left"))).toBeLessThan(
      Math.abs(eyes.horizontalAngle("right")),
    );
  });

  it("behind-plane targets clamp to the minimum forward distance", () => {
    const eyes = new EyeModel();
    eyes.setGaze({ x: 0, y: 0, z: -0.5 });
    expect(eyes.state.left.z).toBeGreaterThan(0);
    expect(eyes.convergenceAngle()).toBeLessThan(Math.PI); // no cross-eyed singularity
  });

  it("parallel gaze at effectively infinite distance centers both pupils", () => {
    const eyes = new EyeModel();
    eyes.setGaze({ x: 0, y: 0, z: 1e6 });
    expect(Math.abs(eyes.pupilOffset("left").x)).toBeLessThan(1e-7);
    expect(Math.abs(eyes.pupilOffset("right").x)).toBeLessThan(1e-7);
  });
});
