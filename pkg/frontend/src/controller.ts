/**
 * Rotation-blur gating controller, ported transition-for-transition from the
 * Python package so an exported session replays to the same sigma series.
 * Keep the arithmetic expression shapes identical when editing either side.
 */

export enum Phase {
  Idle = "Idle",
  Pending = "Pending",
  Active = "Active",
  Releasing = "Releasing",
}

export interface ControllerConfig {
  aMinDegS2: number;
  activationFrames: number;
  gainPxPerDegS2: number;
  sigmaMaxPx: number;
  emaAlpha: number;
  attackTauS: number;
  releaseTauS: number;
  vStopDegS: number;
  sigmaEpsPx: number;
  degPerCount: number;
}

export const DEFAULT_CONFIG: ControllerConfig = {
  aMinDegS2: 200.0,
  activationFrames: 5,
  gainPxPerDegS2: 0.01,
  sigmaMaxPx: 8.0,
  emaAlpha: 0.5,
  attackTauS: 0.05,
  releaseTauS: 0.3,
  vStopDegS: 10.0,
  sigmaEpsPx: 0.05,
  degPerCount: 0.022,
};

export interface InputSample {
  tUs: number;
  ctrlYawDeltaDeg: number;
  ctrlPitchDeltaDeg: number;
  headYawDeltaDeg: number;
  headPitchDeltaDeg: number;
  headRollDeltaDeg: number;
}

export interface KinematicState {
  vDegS: number;
  aDegS2: number;
  lastTUs: number | null;
}

export interface ControllerState {
  phase: Phase;
  pendingCount: number;
  sigmaPx: number;
  kin: KinematicState;
}

export interface BlurFrameOutput {
  tUs: number;
  sigmaPx: number;
  phase: Phase;
  vDegS: number;
  aDegS2: number;
}

export function estimateKinematics(
  prev: KinematicState,
  yawDeltaDeg: number,
  tUs: number,
  config: ControllerConfig,
): KinematicState {
  if (!Number.isFinite(yawDeltaDeg)) {
    throw new Error(`yaw delta must be finite, got ${yawDeltaDeg}`);
  }
  let refTUs: number;
  if (prev.lastTUs === null) {
    if (tUs < 0) throw new Error(`timestamps start at 0, got ${tUs}`);
    if (tUs === 0) return { vDegS: 0.0, aDegS2: 0.0, lastTUs: 0 };
    refTUs = 0;
  } else {
    if (tUs <= prev.lastTUs) {
      throw new Error(`t_us ${tUs} does not advance past ${prev.lastTUs}`);
    }
    refTUs = prev.lastTUs;
  }
  const dtS = (tUs - refTUs) / 1e6;
  const alpha = config.emaAlpha;
  const rawV = yawDeltaDeg / dtS;
  const v = alpha * rawV + (1.0 - alpha) * prev.vDegS;
  const rawA = (v - prev.vDegS) / dtS;
  const a = alpha * rawA + (1.0 - alpha) * prev.aDegS2;
  return { vDegS: v, aDegS2: a, lastTUs: tUs };
}

export function reset(config: ControllerConfig): ControllerState {
  validateConfig(config);
  return {
    phase: Phase.Idle,
    pendingCount: 0,
    sigmaPx: 0.0,
    kin: { vDegS: 0.0, aDegS2: 0.0, lastTUs: null },
  };
}

export function validateConfig(config: ControllerConfig): void {
  for (const [key, value] of Object.entries(config)) {
    if (!Number.isFinite(value) || value <= 0) {
      throw new Error(`${key} must be positive and finite, got ${value}`);
    }
  }
  if (config.emaAlpha > 1.0) throw new Error(`emaAlpha must be in (0, 1], got ${config.emaAlpha}`);
  if (!Number.isInteger(config.activationFrames) || config.activationFrames < 1) {
    throw new Error(`activationFrames must be an integer >= 1, got ${config.activationFrames}`);
  }
  if (config.sigmaEpsPx >= config.sigmaMaxPx) {
    throw new Error("sigmaEpsPx must be smaller than sigmaMaxPx");
  }
}

export function step(
  state: ControllerState,
  sample: InputSample,
  config: ControllerConfig,
): [ControllerState, BlurFrameOutput] {
  const kin = estimateKinematics(state.kin, sample.ctrlYawDeltaDeg, sample.tUs, config);
  const prevT = state.kin.lastTUs !== null ? state.kin.lastTUs : 0;
  const dtS = (sample.tUs - prevT) / 1e6;

  const qualifying = Math.abs(kin.aDegS2) >= config.aMinDegS2;

  let phase: Phase;
  let count: number;
  if (state.phase === Phase.Idle || state.phase === Phase.Pending) {
    if (qualifying) {
      const run = state.pendingCount + 1;
      if (run >= config.activationFrames) {
        phase = Phase.Active;
        count = 0;
      } else {
        phase = Phase.Pending;
        count = run;
      }
    } else {
      phase = Phase.Idle;
      count = 0;
    }
  } else if (state.phase === Phase.Active) {
    phase = Math.abs(kin.vDegS) < config.vStopDegS ? Phase.Releasing : Phase.Active;
    count = 0;
  } else {
    phase = Phase.Releasing;
    count = 0;
  }

  let sigma: number;
  if (phase === Phase.Idle || phase === Phase.Pending) {
    sigma = 0.0;
  } else if (phase === Phase.Active) {
    const target = Math.min(config.gainPxPerDegS2 * Math.abs(kin.aDegS2), config.sigmaMaxPx);
    const tau = target > state.sigmaPx ? config.attackTauS : config.releaseTauS;
    sigma = state.sigmaPx + (target - state.sigmaPx) * (1.0 - Math.exp(-dtS / tau));
  } else {
    sigma = state.sigmaPx * Math.exp(-dtS / config.releaseTauS);
    if (sigma < config.sigmaEpsPx) {
      phase = Phase.Idle;
      sigma = 0.0;
    }
  }

  const newState: ControllerState = { phase, pendingCount: count, sigmaPx: sigma, kin };
  const output: BlurFrameOutput = {
    tUs: sample.tUs,
    sigmaPx: sigma,
    phase,
    vDegS: kin.vDegS,
    aDegS2: kin.aDegS2,
  };
  return [newState, output];
}
