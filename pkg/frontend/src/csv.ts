/**
 * Session-log serialization in the formats the reference CLI parses:
 * trace CSV, sigma CSV (with config fingerprint line), events CSV, and the
 * flat key=value controller config document.
 */
import type { BlurFrameOutput, ControllerConfig, InputSample } from "./controller.js";

export const TRACE_HEADER =
  "t_us,ctrl_yaw_delta_deg,ctrl_pitch_delta_deg,head_yaw_delta_deg,head_pitch_delta_deg,head_roll_delta_deg";
export const SIGMA_HEADER = "t_us,sigma_px,phase,v_deg_s,a_deg_s2";
export const EVENTS_HEADER = "t_us,event,value";

export type SessionEventName =
  | "rb_toggled"
  | "fms_prompt"
  | "fms_response"
  | "fms_timeout"
  | "pause"
  | "resume";

export interface SessionEvent {
  tUs: number;
  event: SessionEventName;
  value: string;
}

/** JS already prints the shortest round-trip decimal; it parses cleanly on
 * the other side even though integral floats drop the trailing ".0". */
function fmt(value: number): string {
  if (!Number.isFinite(value)) throw new Error(`cannot serialize non-finite value ${value}`);
  return String(value);
}

export function writeTrace(samples: InputSample[], meta: Record<string, string> = {}): string {
  const lines: string[] = [];
  for (const key of Object.keys(meta).sort()) lines.push(`# ${key}=${meta[key]}`);
  lines.push(TRACE_HEADER);
  for (const s of samples) {
    lines.push(
      `${s.tUs},${fmt(s.ctrlYawDeltaDeg)},${fmt(s.ctrlPitchDeltaDeg)},` +
        `${fmt(s.headYawDeltaDeg)},${fmt(s.headPitchDeltaDeg)},${fmt(s.headRollDeltaDeg)}`,
    );
  }
  return lines.join("\n") + "\n";
}

export function writeSigmaSeries(outputs: BlurFrameOutput[], fingerprint: string): string {
  const lines = [`# config_fingerprint=${fingerprint}`, SIGMA_HEADER];
  for (const o of outputs) {
    lines.push(`${o.tUs},${fmt(o.sigmaPx)},${o.phase},${fmt(o.vDegS)},${fmt(o.aDegS2)}`);
  }
  return lines.join("\n") + "\n";
}

export function writeEvents(events: SessionEvent[]): string {
  const lines = [EVENTS_HEADER];
  for (const e of events) lines.push(`${e.tUs},${e.event},${e.value}`);
  return lines.join("\n") + "\n";
}

const CONFIG_FIELDS: [string, keyof ControllerConfig, "float" | "int"][] = [
  ["a_min_deg_s2", "aMinDegS2", "float"],
  ["activation_frames", "activationFrames", "int"],
  ["gain_px_per_deg_s2", "gainPxPerDegS2", "float"],
  ["sigma_max_px", "sigmaMaxPx", "float"],
  ["ema_alpha", "emaAlpha", "float"],
  ["attack_tau_s", "attackTauS", "float"],
  ["release_tau_s", "releaseTauS", "float"],
  ["v_stop_deg_s", "vStopDegS", "float"],
  ["sigma_eps_px", "sigmaEpsPx", "float"],
  ["deg_per_count", "degPerCount", "float"],
];

/** Python spells integral floats with a trailing ".0"; mirror that so the
 * fingerprint hashes the same bytes on both sides. */
function pythonRepr(value: number, kind: "float" | "int"): string {
  if (kind === "int") return String(value);
  if (Number.isInteger(value) && Math.abs(value) < 1e16) return `${value}.0`;
  return String(value);
}

export function writeConfigDocument(config: ControllerConfig): string {
  return CONFIG_FIELDS.map(([name, key, kind]) => `${name} = ${pythonRepr(config[key], kind)}`).join("\n") + "\n";
}

export async function configFingerprint(config: ControllerConfig): Promise<string> {
  const canonical = [...CONFIG_FIELDS]
    .sort((a, b) => (a[0] < b[0] ? -1 : 1))
    .map(([name, key, kind]) => `${name}=${pythonRepr(config[key], kind)}`)
    .join("\n");
  const digest = await crypto.subtle.digest("SHA-256", new TextEncoder().encode(canonical));
  return [...new Uint8Array(digest)].map((b) => b.toString(16).padStart(2, "0")).join("");
}
