// Eye model: two spheres in the face frame, rotated toward a 3D gaze
// target so the pair converges correctly, then orthographically projected
// onto the screen plane for rendering.
//
// Face frame: x right, y up, z toward the viewer; units in meters.

export interface Vec3 {
  x: number;
  y: number;
  z: number;
}

export interface EyeModelOptions {
  interpupillary?: number; // meters between pupil centers
  eyeRadius?: number;
  eyeHeight?: number; // y offset of the eye line
}

export interface EyeState {
  left: Vec3; // unit gaze direction
  right: Vec3;
}

const MIN_FORWARD = 0.01; // behind-plane targets clamp to 1 cm in front

function normalize(v: Vec3): Vec3 {
  const n = Math.hypot(v.x, v.y, v.z);
  return { x: v.x / n, y: v.y / n, z: v.z / n };
}

export class EyeModel {
  readonly separation: number;
  readonly radius: number;
  readonly height: number;
  state: EyeState;

  constructor(opts: EyeModelOptions = {}) {
    this.separation = opts.interpupillary ?? 0.06;
    this.radius = opts.eyeRadius ?? 0.02;
    this.height = opts.eyeHeight ?? 0.0;
    this.state = { left: { x: 0, y: 0, z: 1 }, right: { x: 0, y: 0, z: 1 } };
  }

  center(side: "left" | "right"): Vec3 {
    // screen-left eye sits at negative x (the robot's right eye)
    const x = side === "left" ? -this.separation / 2 : this.separation / 2;
    return { x, y: this.height, z: 0 };
  }

  /** Point both eyes at a target in the face frame (vergence included). */
  setGaze(target: Vec3): EyeState {
    const clamped: Vec3 = {
      x: target.x,
      y: target.y,
      z: Math.max(target.z, MIN_FORWARD),
    };
    const aim = (side: "left" | "right"): Vec3 => {
      const c = this.center(side);
      return normalize({ x: clamped.x - c.x, y: clamped.y - c.y, z: clamped.z - c.z });
    };
    this.state = { left: aim("left"), right: aim("right") };
    return this.state;
  }

  reset(): EyeState {
    this.state = { left: { x: 0, y: 0, z: 1 }, right: { x: 0, y: 0, z: 1 } };
    return this.state;
  }

  /** Horizontal rotation of one eye from straight ahead, radians
   *  (positive toward +x). */
  horizontalAngle(side: "left" | "right"): number {
    const g = this.state[side];
    return Math.atan2(g.x, g.z);
  }

  /** 2D pupil offset from the eye center under orthographic projection,
   *  in meters on the screen plane (y up). */
  pupilOffset(side: "left" | "right"): { x: number; y: number } {
    const g = this.state[side];
    return { x: g.x * this.radius, y: g.y * this.radius };
  }

  /** Convergence angle between the two gaze rays, radians. */
  convergenceAngle(): number {
    const l = this.state.left;
    const r = this.state.right;
    const dot = l.x * r.x + l.y * r.y + l.z * r.z;
    return Math.acos(Math.min(1, Math.max(-1, dot)));
  }
}
