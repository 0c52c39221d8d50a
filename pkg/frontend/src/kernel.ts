/** Normalized Gaussian taps, same formula as the reference implementation;
 * the radius cap keeps the fragment shader inside its real-time budget. */

export const GPU_MAX_RADIUS = 32;

export function makeKernel(sigmaPx: number, truncation = 3.0, maxRadius = GPU_MAX_RADIUS): number[] {
  if (!Number.isFinite(sigmaPx) || sigmaPx < 0) {
    throw new Error(`sigma must be finite and >= 0, got ${sigmaPx}`);
  }
  if (sigmaPx < 1e-6) return [1.0];
  const radius = Math.min(Math.ceil(truncation * sigmaPx), maxRadius);
  const weights: number[] = [];
  let total = 0;
  for (let i = -radius; i <= radius; i++) {
    const w = Math.exp(-(i * i) / (2.0 * sigmaPx * sigmaPx));
    weights.push(w);
    total += w;
  }
  return weights.map((w) => w / total);
}
