/**
 * Headless session core: advances the gating controller once per rendered
 * frame, keeps the trace / sigma / event logs, and serializes them in the
 * formats the reference CLI replays.  No DOM access here so the whole
 * session lifecycle is unit-testable in node.
 */
import type { BlurFrameOutput, ControllerConfig, ControllerState, InputSample } from "./controller.js";
import { reset, step } from "./controller.js";
import {
  SessionEvent,
  configFingerprint,
  writeConfigDocument,
  writeEvents,
  writeSigmaSeries,
  writeTrace,
} from "./csv.js";
import { PromptScheduler, SchedulerAction } from "./scheduler.js";

export interface DemoConfig {
  controller: ControllerConfig;
  moveSpeed: number; // world units per second, constant while a key is held
  promptIntervalS: number;
  sessionLengthS: number;
  rbEnabled: boolean;
}

export const DEFAULT_DEMO: Omit<DemoConfig, "controller"> = {
  moveSpeed: 3.0,
  promptIntervalS: 120,
  sessionLengthS: 600,
  rbEnabled: true,
};

export interface FrameResult {
  output: BlurFrameOutput;
  /** sigma actually applied to the frame: zero when blurring is toggled off */
  appliedSigmaPx: number;
}

export interface ExportedFiles {
  trace: string;
  events: string;
  sigma: string;
  config: string;
}

export class SessionRecorder {
  readonly config: DemoConfig;
  readonly scheduler: PromptScheduler;
  rbEnabled: boolean;

  private state: ControllerState;
  private sessionTimeUs = 0;
  private samples: InputSample[] = [];
  private outputs: BlurFrameOutput[] = [];
  private events: SessionEvent[] = [];

  constructor(config: DemoConfig) {
    this.config = config;
    this.rbEnabled = config.rbEnabled;
    this.state = reset(config.controller);
    this.scheduler = new PromptScheduler(config.promptIntervalS, config.sessionLengthS);
  }

  get nowUs(): number {
    return this.sessionTimeUs;
  }

  get frameCount(): number {
    return this.samples.length;
  }

  get sigmaLog(): readonly BlurFrameOutput[] {
    return this.outputs;
  }

  get eventLog(): readonly SessionEvent[] {
    return this.events;
  }

  /** One rendered frame: dt in microseconds, pointer movement in counts. */
  frame(dtUs: number, yawCounts: number): FrameResult {
    const tick = Math.max(1, Math.round(dtUs));
    this.sessionTimeUs += tick;
    const sample: InputSample = {
      tUs: this.sessionTimeUs,
      ctrlYawDeltaDeg: yawCounts * this.config.controller.degPerCount,
      ctrlPitchDeltaDeg: 0.0, // pitch is locked; aim stays parallel to the ground
      headYawDeltaDeg: 0.0, // no head tracking in-browser
      headPitchDeltaDeg: 0.0,
      headRollDeltaDeg: 0.0,
    };
    const [state, output] = step(this.state, sample, this.config.controller);
    this.state = state;
    this.samples.push(sample);
    this.outputs.push(output);
    return { output, appliedSigmaPx: this.rbEnabled ? output.sigmaPx : 0.0 };
  }

  toggleRb(): boolean {
    this.rbEnabled = !this.rbEnabled;
    this.logEvent("rb_toggled", this.rbEnabled ? "1" : "0");
    return this.rbEnabled;
  }

  logEvent(event: SessionEvent["event"], value: string): void {
    this.events.push({ tUs: this.sessionTimeUs, event, value });
  }

  /** Poll the prompt scheduler and log whatever it emits. */
  pollScheduler(wallTimeS: number): SchedulerAction[] {
    const actions = this.scheduler.advance(this.sessionTimeUs, wallTimeS);
    for (const action of actions) {
      if (action.kind === "prompt") this.logEvent("fms_prompt", String(action.index));
      if (action.kind === "timeout") this.logEvent("fms_timeout", String(action.index));
    }
    return actions;
  }

  respondToPrompt(rating: number): void {
    if (!Number.isInteger(rating) || rating < 0 || rating > 6) {
      throw new Error(`rating must be an integer in 0..6, got ${rating}`);
    }
    this.scheduler.resolvePrompt();
    this.logEvent("fms_response", String(rating));
  }

  async exportFiles(): Promise<ExportedFiles> {
    const fingerprint = await configFingerprint(this.config.controller);
    return {
      trace: writeTrace(this.samples, { source: "rotoblur-demo" }),
      events: writeEvents(this.events),
      sigma: writeSigmaSeries(this.outputs, fingerprint),
      config: writeConfigDocument(this.config.controller),
    };
  }
}
