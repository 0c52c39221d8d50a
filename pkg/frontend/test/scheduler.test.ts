import assert from "node:assert/strict";
import { test } from "node:test";

import { PromptScheduler, RATING_LABELS, SchedulerAction } from "../src/scheduler.js";

function drive(
  scheduler: PromptScheduler,
  stepS: number,
  totalS: number,
  respondImmediately = true,
): SchedulerAction[] {
  const actions: SchedulerAction[] = [];
  let wall = 0;
  // poll a little past the end so the end signal (deferred until the last
  // prompt resolves) gets observed
  for (let t = stepS; t <= totalS + 3 * stepS; t += stepS) {
    wall += stepS;
    for (const action of scheduler.advance(Math.round(Math.min(t, totalS) * 1e6), wall)) {
      actions.push(action);
      if (action.kind === "prompt" && respondImmediately) scheduler.resolvePrompt();
    }
  }
  return actions;
}

test("ten-minute session with two-minute interval fires exactly 5 prompts", () => {
  const scheduler = new PromptScheduler(120, 600);
  assert.equal(scheduler.totalPrompts, 5);
  const actions = drive(scheduler, 1, 600);
  assert.equal(actions.filter((a) => a.kind === "prompt").length, 5);
  assert.deepEqual(
    actions.filter((a) => a.kind === "prompt").map((a) => a.index),
    [1, 2, 3, 4, 5],
  );
  assert.equal(actions.filter((a) => a.kind === "end").length, 1);
});

test("interval 1s over a 3s session fires exactly 3 prompts", () => {
  const scheduler = new PromptScheduler(1, 3);
  const actions = drive(scheduler, 0.25, 3.5);
  assert.equal(actions.filter((a) => a.kind === "prompt").length, 3);
});

test("non-dividing session length floors the prompt count", () => {
  const scheduler = new PromptScheduler(120, 250);
  const actions = drive(scheduler, 1, 260);
  assert.equal(actions.filter((a) => a.kind === "prompt").length, 2);
  assert.equal(actions.filter((a) => a.kind === "end").length, 1);
});

test("an unanswered prompt times out after 30s of wall time", () => {
  const scheduler = new PromptScheduler(10, 60);
  let actions = scheduler.advance(10_000_000, 100);
  assert.equal(actions[0]?.kind, "prompt");
  assert.ok(scheduler.hasOpenPrompt);
  actions = scheduler.advance(10_000_000, 129.9);
  assert.equal(actions.length, 0);
  actions = scheduler.advance(10_000_000, 130.0);
  assert.equal(actions[0]?.kind, "timeout");
  assert.ok(!scheduler.hasOpenPrompt);
});

test("session does not end while a prompt is open", () => {
  const scheduler = new PromptScheduler(10, 10);
  let actions = scheduler.advance(10_000_000, 0);
  assert.equal(actions[0]?.kind, "prompt");
  actions = scheduler.advance(10_000_000, 5);
  assert.equal(actions.length, 0);
  scheduler.resolvePrompt();
  actions = scheduler.advance(10_000_000, 6);
  assert.deepEqual(actions, [{ kind: "end" }]);
  assert.ok(scheduler.hasEnded);
});

test("rating labels cover 0..6 verbatim", () => {
  assert.equal(RATING_LABELS.length, 7);
  assert.equal(RATING_LABELS[0], "0 - no symptoms");
  assert.equal(RATING_LABELS[6], "6 - moderate nausea, want to stop");
});
