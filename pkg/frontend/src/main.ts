/**
 * Browser wiring: pointer-locked yaw, constant-speed forward/back walking,
 * live blur, timed rating prompts, and CSV export at session end.
 *
 * Controls: click to capture the pointer; mouse X rotates (yaw only),
 * W/S or Up/Down walk, B toggles blurring, E ends the session and exports.
 * Rating prompts are answered with keys 0-6 (or by clicking a label).
 */
import { DEFAULT_CONFIG } from "./controller.js";
import { CorridorRenderer } from "./render.js";
import { RATING_LABELS } from "./scheduler.js";
import { DEFAULT_DEMO, SessionRecorder } from "./session.js";

const canvas = document.getElementById("view") as HTMLCanvasElement;
const hud = document.getElementById("hud") as HTMLDivElement;
const modal = document.getElementById("modal") as HTMLDivElement;
const modalList = document.getElementById("modal-options") as HTMLUListElement;

const recorder = new SessionRecorder({ controller: { ...DEFAULT_CONFIG }, ...DEFAULT_DEMO });
const renderer = new CorridorRenderer(canvas);

let yawRad = 0;
let posX = 0;
let posZ = 0;
let walk = 0; // -1, 0, +1
let pendingCounts = 0;
let pointerLocked = false;
let modalOpen = false;
let exported = false;
let lastFrameMs: number | null = null;

function setModal(open: boolean, promptIndex = 0): void {
  modalOpen = open;
  modal.style.display = open ? "block" : "none";
  if (open) {
    (document.getElementById("modal-title") as HTMLElement).textContent =
      `Rating ${promptIndex}/${recorder.scheduler.totalPrompts} — how do you feel right now?`;
  }
}

function respond(rating: number): void {
  if (!modalOpen) return;
  recorder.respondToPrompt(rating);
  setModal(false);
  if (!pointerLocked && !recorder.scheduler.hasEnded) canvas.requestPointerLock();
}

for (let rating = 0; rating <= 6; rating++) {
  const item = document.createElement("li");
  item.textContent = RATING_LABELS[rating];
  item.addEventListener("click", () => respond(rating));
  modalList.appendChild(item);
}

async function endSession(): Promise<void> {
  if (exported) return;
  exported = true;
  const files = await recorder.exportFiles();
  const downloads: [string, string][] = [
    ["session_trace.csv", files.trace],
    ["session_events.csv", files.events],
    ["session_sigma.csv", files.sigma],
    ["session_config.cfg", files.config],
  ];
  for (const [name, text] of downloads) {
    const url = URL.createObjectURL(new Blob([text], { type: "text/csv" }));
    const anchor = document.createElement("a");
    anchor.href = url;
    anchor.download = name;
    anchor.click();
    URL.revokeObjectURL(url);
  }
  hud.textContent = "session ended — files exported. Replay with: rotoblur replay --trace session_trace.csv --config session_config.cfg --out replay.csv";
}

canvas.addEventListener("click", () => {
  if (!modalOpen && !recorder.scheduler.hasEnded) canvas.requestPointerLock();
});

document.addEventListener("pointerlockchange", () => {
  const locked = document.pointerLockElement === canvas;
  if (!locked && pointerLocked && !modalOpen && !recorder.scheduler.hasEnded) {
    recorder.logEvent("pause", "pointer_lost");
    lastFrameMs = null;
  }
  if (locked && !pointerLocked && recorder.frameCount > 0) {
    recorder.logEvent("resume", "pointer_regained");
  }
  pointerLocked = locked;
});

document.addEventListener("mousemove", (event) => {
  if (pointerLocked && !modalOpen) pendingCounts += event.movementX;
  // movementY deliberately ignored: rotation is restricted to the horizontal plane
});

document.addEventListener("keydown", (event) => {
  if (modalOpen && event.key >= "0" && event.key <= "6") {
    respond(Number(event.key));
    return;
  }
  if (event.key === "w" || event.key === "ArrowUp") walk = 1;
  if (event.key === "s" || event.key === "ArrowDown") walk = -1;
  if (event.key === "b" || event.key === "B") recorder.toggleRb();
  if (event.key === "e" || event.key === "E") void endSession();
});

document.addEventListener("keyup", (event) => {
  if (event.key === "w" || event.key === "ArrowUp" || event.key === "s" || event.key === "ArrowDown") {
    walk = 0;
  }
});

function tick(nowMs: number): void {
  requestAnimationFrame(tick);
  canvas.width = canvas.clientWidth;
  canvas.height = canvas.clientHeight;
  renderer.resize(canvas.width, canvas.height);

  const running = pointerLocked && !modalOpen && !recorder.scheduler.hasEnded;
  let sigmaApplied = 0;
  if (running) {
    if (lastFrameMs !== null) {
      const dtMs = Math.min(nowMs - lastFrameMs, 100);
      const dtUs = dtMs * 1000;
      const counts = pendingCounts;
      pendingCounts = 0;
      const result = recorder.frame(dtUs, counts);
      sigmaApplied = result.appliedSigmaPx;
      yawRad += counts * recorder.config.controller.degPerCount * (Math.PI / 180);
      const dtS = dtMs / 1000;
      posX += Math.sin(yawRad) * walk * recorder.config.moveSpeed * dtS;
      posZ += Math.cos(yawRad) * walk * recorder.config.moveSpeed * dtS;
      posX = Math.max(-3.5, Math.min(3.5, posX)); // slide along the walls; no strafing exists
      const last = recorder.sigmaLog[recorder.sigmaLog.length - 1];
      hud.textContent =
        `t ${(recorder.nowUs / 1e6).toFixed(1)}s  phase ${last.phase}  ` +
        `sigma ${last.sigmaPx.toFixed(2)}px  blur ${recorder.rbEnabled ? "ON" : "OFF (logged only)"}`;
    }
    lastFrameMs = nowMs;
    for (const action of recorder.pollScheduler(nowMs / 1000)) {
      if (action.kind === "prompt") {
        setModal(true, action.index ?? 0);
        document.exitPointerLock();
      }
      if (action.kind === "end") void endSession();
    }
  } else {
    lastFrameMs = null;
    if (modalOpen) {
      for (const action of recorder.pollScheduler(nowMs / 1000)) {
        if (action.kind === "timeout") setModal(false);
        if (action.kind === "prompt") setModal(true, action.index ?? 0);
        if (action.kind === "end") void endSession();
      }
    }
  }
  renderer.draw(yawRad, [posX, 0, posZ], sigmaApplied);
}

hud.textContent = "click the scene to start (pointer lock). W/S walk, mouse turns, B toggles blur, E ends + exports.";
requestAnimationFrame(tick);
