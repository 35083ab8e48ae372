// Page entry point: one render loop, one message queue.
// URL parameters: ?robot=<id>&server=<host:port>

import { BridgeClient } from "./client.js";
import { FaceState } from "./face.js";
import { parseMessage } from "./protocol.js";
import { drawFace } from "./renderer.js";
import { drawPreview } from "./preview.js";

const params = new URLSearchParams(window.location.search);
const robot = params.get("robot") ?? "default";
const server = params.get("server") ?? window.location.host;
const wsUrl = `ws://${server}/robot/${robot}`;

const faceCanvas = document.getElementById("face") as HTMLCanvasElement;
const previewCanvas = document.getElementById("preview") as HTMLCanvasElement;
const statusLine = document.getElementById("status") as HTMLElement;

const state = new FaceState();

// ?preset=<name> loads ./presets/<name>.json (or any URL) as a face_config
const preset = params.get("preset");
if (preset) {
  const url = preset.includes("/") ? preset : `./presets/${preset}.json`;
  fetch(url)
    .then((resp) => resp.json())
    .then((config) => {
      // run the preset through the same validation as live messages
      const frame = JSON.stringify({
        v: 1,
        robot,
        seq: 0,
        type: "face_config",
        payload: { config },
      });
      state.apply(parseMessage(frame), performance.now());
    })
    .catch((err) => {
      statusLine.textContent = `preset ${preset}: ${err}`;
      statusLine.classList.add("error");
    });
}

const client = new BridgeClient(wsUrl, {
  onStatus: (s) => {
    statusLine.textContent = `${robot} @ ${server}: ${s}`;
  },
  onSchemaMismatch: (err, raw) => {
    statusLine.textContent = `${err.message} in ${raw.slice(0, 120)}`;
    statusLine.classList.add("error");
  },
});
client.connect();

function frame(now_ms: number): void {
  for (const msg of client.drain()) {
    state.apply(msg, now_ms);
    if (msg.payload.type === "audio" && msg.payload.key) {
      const audio = new Audio(`http://${server}/audio/${msg.payload.key}`);
      void audio.play().catch(() => undefined); // autoplay may be blocked
    }
  }
  const faceCtx = faceCanvas.getContext("2d");
  if (faceCtx) drawFace(faceCtx, state, now_ms);
  const previewCtx = previewCanvas.getContext("2d");
  if (previewCtx) drawPreview(previewCtx, state.platform);
  requestAnimationFrame(frame);
}

requestAnimationFrame(frame);
