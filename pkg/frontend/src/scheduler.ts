/**
 * Timed sickness-rating prompts: one modal 0-6 prompt per interval of
 * *session* time (which freezes while a modal is open), a wall-clock
 * timeout, and an end-of-session signal once the last due prompt resolves.
 */

export interface SchedulerAction {
  kind: "prompt" | "timeout" | "end";
  index?: number; // 1-based prompt number
}

export class PromptScheduler {
  readonly intervalUs: number;
  readonly sessionLengthUs: number;
  readonly timeoutS: number;
  readonly totalPrompts: number;

  promptsFired = 0;
  private promptOpen = false;
  private promptShownWallS = 0;
  private ended = false;

  constructor(promptIntervalS: number, sessionLengthS: number, timeoutS = 30) {
    if (promptIntervalS <= 0 || sessionLengthS <= 0) {
      throw new Error("interval and session length must be positive");
    }
    this.intervalUs = Math.round(promptIntervalS * 1e6);
    this.sessionLengthUs = Math.round(sessionLengthS * 1e6);
    this.timeoutS = timeoutS;
    this.totalPrompts = Math.floor(sessionLengthS / promptIntervalS);
  }

  get hasOpenPrompt(): boolean {
    return this.promptOpen;
  }

  get hasEnded(): boolean {
    return this.ended;
  }

  /** Record the participant's answer for the open prompt. */
  resolvePrompt(): void {
    if (!this.promptOpen) throw new Error("no prompt is open");
    this.promptOpen = false;
  }

  advance(sessionTimeUs: number, wallTimeS: number): SchedulerAction[] {
    const actions: SchedulerAction[] = [];
    if (this.ended) return actions;
    if (this.promptOpen) {
      if (wallTimeS - this.promptShownWallS >= this.timeoutS) {
        this.promptOpen = false;
        actions.push({ kind: "timeout", index: this.promptsFired });
      } else {
        return actions;
      }
    }
    if (
      this.promptsFired < this.totalPrompts &&
      sessionTimeUs >= (this.promptsFired + 1) * this.intervalUs
    ) {
      this.promptsFired += 1;
      this.promptOpen = true;
      this.promptShownWallS = wallTimeS;
      actions.push({ kind: "prompt", index: this.promptsFired });
      return actions;
    }
    if (sessionTimeUs >= this.sessionLengthUs) {
      this.ended = true;
      actions.push({ kind: "end" });
    }
    return actions;
  }
}

/** Verbatim rating scale shown to the participant. */
export const RATING_LABELS: readonly string[] = [
  "0 - no symptoms",
  "1 - any unpleasant symptoms",
  "2 - mild unpleasant symptoms",
  "3 - mild nausea",
  "4 - mild to moderate nausea",
  "5 - moderate nausea but can continue",
  "6 - moderate nausea, want to stop",
];
