/**
 * WebGL2 renderer: a procedural high-contrast corridor drawn in a fragment
 * shader, then an optional two-pass separable Gaussian blur over the full
 * frame.  Sigma arrives in 1080-reference pixels and is scaled linearly to
 * the actual canvas height before the kernel is built.
 */
import { GPU_MAX_RADIUS, makeKernel } from "./kernel.js";

const QUAD_VS = `#version 300 es
const vec2 verts[3] = vec2[3](vec2(-1.0, -1.0), vec2(3.0, -1.0), vec2(-1.0, 3.0));
void main() { gl_Position = vec4(verts[gl_VertexID], 0.0, 1.0); }
`;

const SCENE_FS = `#version 300 es
precision highp float;
uniform vec2 uRes;
uniform float uYawRad;
uniform vec3 uPos;
out vec4 outColor;

float checker(vec2 p) {
  return mod(floor(p.x) + floor(p.y), 2.0);
}

vec3 shade(vec3 base, float check, float dist) {
  vec3 c = mix(base * 0.12, base, check);
  float fog = exp(-dist * 0.045);
  return mix(vec3(0.02, 0.02, 0.03), c, fog);
}

void main() {
  vec2 ndc = (gl_FragCoord.xy / uRes) * 2.0 - 1.0;
  float aspect = uRes.x / uRes.y;
  vec3 dir = normalize(vec3(ndc.x * aspect * 0.66, ndc.y * 0.66, 1.0));
  float c = cos(uYawRad), s = sin(uYawRad);
  dir = vec3(c * dir.x + s * dir.z, dir.y, -s * dir.x + c * dir.z);

  float best = 1e9;
  vec3 color = vec3(0.0);
  // floor y=-1.5
  if (dir.y < 0.0) {
    float t = (-1.5 - uPos.y) / dir.y;
    vec3 hit = uPos + dir * t;
    if (t < best) { best = t; color = shade(vec3(0.95, 0.95, 0.9), checker(hit.xz), t); }
  }
  // ceiling y=+1.5
  if (dir.y > 0.0) {
    float t = (1.5 - uPos.y) / dir.y;
    vec3 hit = uPos + dir * t;
    if (t < best) { best = t; color = shade(vec3(0.55, 0.6, 0.7), checker(hit.xz), t); }
  }
  // walls x=±4
  if (dir.x != 0.0) {
    float wall = dir.x > 0.0 ? 4.0 : -4.0;
    float t = (wall - uPos.x) / dir.x;
    vec3 hit = uPos + dir * t;
    if (t > 0.0 && t < best) {
      best = t;
      color = shade(vec3(0.9, 0.55, 0.25), checker(hit.zy * vec2(1.0, 1.0)), t);
    }
  }
  outColor = vec4(color, 1.0);
}
`;

const BLUR_FS = `#version 300 es
precision highp float;
uniform sampler2D uTex;
uniform vec2 uStep;      // one texel along the pass direction
uniform int uRadius;
uniform float uWeights[${2 * GPU_MAX_RADIUS + 1}];
uniform vec2 uRes;
out vec4 outColor;

void main() {
  vec2 uv = gl_FragCoord.xy / uRes;
  vec3 acc = vec3(0.0);
  for (int i = -${GPU_MAX_RADIUS}; i <= ${GPU_MAX_RADIUS}; i++) {
    if (abs(i) > uRadius) continue;
    acc += uWeights[i + uRadius] * texture(uTex, uv + float(i) * uStep).rgb;
  }
  outColor = vec4(acc, 1.0);
}
`;

function compile(gl: WebGL2RenderingContext, kind: number, src: string): WebGLShader {
  const shader = gl.createShader(kind)!;
  gl.shaderSource(shader, src);
  gl.compileShader(shader);
  if (!gl.getShaderParameter(shader, gl.COMPILE_STATUS)) {
    throw new Error(`shader compile failed: ${gl.getShaderInfoLog(shader)}`);
  }
  return shader;
}

function link(gl: WebGL2RenderingContext, fs: string): WebGLProgram {
  const program = gl.createProgram()!;
  gl.attachShader(program, compile(gl, gl.VERTEX_SHADER, QUAD_VS));
  gl.attachShader(program, compile(gl, gl.FRAGMENT_SHADER, fs));
  gl.linkProgram(program);
  if (!gl.getProgramParameter(program, gl.LINK_STATUS)) {
    throw new Error(`program link failed: ${gl.getProgramInfoLog(program)}`);
  }
  return program;
}

interface Target {
  fbo: WebGLFramebuffer;
  tex: WebGLTexture;
}

export class CorridorRenderer {
  private gl: WebGL2RenderingContext;
  private sceneProgram: WebGLProgram;
  private blurProgram: WebGLProgram;
  private targets: Target[] = [];
  private width = 0;
  private height = 0;

  constructor(canvas: HTMLCanvasElement) {
    const gl = canvas.getContext("webgl2");
    if (!gl) throw new Error("WebGL2 is required for the demo");
    this.gl = gl;
    this.sceneProgram = link(gl, SCENE_FS);
    this.blurProgram = link(gl, BLUR_FS);
  }

  private makeTarget(): Target {
    const gl = this.gl;
    const tex = gl.createTexture()!;
    gl.bindTexture(gl.TEXTURE_2D, tex);
    gl.texImage2D(gl.TEXTURE_2D, 0, gl.RGBA8, this.width, this.height, 0, gl.RGBA, gl.UNSIGNED_BYTE, null);
    gl.texParameteri(gl.TEXTURE_2D, gl.TEXTURE_MIN_FILTER, gl.NEAREST);
    gl.texParameteri(gl.TEXTURE_2D, gl.TEXTURE_MAG_FILTER, gl.NEAREST);
    // clamp-to-edge matches the reference blur's boundary handling
    gl.texParameteri(gl.TEXTURE_2D, gl.TEXTURE_WRAP_S, gl.CLAMP_TO_EDGE);
    gl.texParameteri(gl.TEXTURE_2D, gl.TEXTURE_WRAP_T, gl.CLAMP_TO_EDGE);
    const fbo = gl.createFramebuffer()!;
    gl.bindFramebuffer(gl.FRAMEBUFFER, fbo);
    gl.framebufferTexture2D(gl.FRAMEBUFFER, gl.COLOR_ATTACHMENT0, gl.TEXTURE_2D, tex, 0);
    gl.bindFramebuffer(gl.FRAMEBUFFER, null);
    return { fbo, tex };
  }

  resize(width: number, height: number): void {
    if (width === this.width && height === this.height) return;
    this.width = width;
    this.height = height;
    const gl = this.gl;
    for (const target of this.targets) {
      gl.deleteFramebuffer(target.fbo);
      gl.deleteTexture(target.tex);
    }
    this.targets = [this.makeTarget(), this.makeTarget()];
    gl.viewport(0, 0, width, height);
  }

  /** Draw one frame; sigmaReferencePx is in 1080-row reference pixels. */
  draw(yawRad: number, pos: [number, number, number], sigmaReferencePx: number): void {
    const gl = this.gl;
    const sigmaCanvasPx = (sigmaReferencePx * this.height) / 1080.0;
    const weights = makeKernel(sigmaCanvasPx);
    const radius = (weights.length - 1) / 2;

    const sceneTarget = radius > 0 ? this.targets[0].fbo : null;
    gl.bindFramebuffer(gl.FRAMEBUFFER, sceneTarget);
    gl.useProgram(this.sceneProgram);
    gl.uniform2f(gl.getUniformLocation(this.sceneProgram, "uRes"), this.width, this.height);
    gl.uniform1f(gl.getUniformLocation(this.sceneProgram, "uYawRad"), yawRad);
    gl.uniform3f(gl.getUniformLocation(this.sceneProgram, "uPos"), pos[0], pos[1], pos[2]);
    gl.drawArrays(gl.TRIANGLES, 0, 3);
    if (radius === 0) return;

    const padded = new Float32Array(2 * GPU_MAX_RADIUS + 1);
    padded.set(weights, 0);
    const passes: [Target, WebGLFramebuffer | null, [number, number]][] = [
      [this.targets[0], this.targets[1].fbo, [1.0 / this.width, 0.0]],
      [this.targets[1], null, [0.0, 1.0 / this.height]],
    ];
    gl.useProgram(this.blurProgram);
    gl.uniform1i(gl.getUniformLocation(this.blurProgram, "uTex"), 0);
    gl.uniform2f(gl.getUniformLocation(this.blurProgram, "uRes"), this.width, this.height);
    gl.uniform1i(gl.getUniformLocation(this.blurProgram, "uRadius"), radius);
    gl.uniform1fv(gl.getUniformLocation(this.blurProgram, "uWeights"), padded);
    for (const [source, dest, step] of passes) {
      gl.bindFramebuffer(gl.FRAMEBUFFER, dest);
      gl.activeTexture(gl.TEXTURE0);
      gl.bindTexture(gl.TEXTURE_2D, source.tex);
      gl.uniform2f(gl.getUniformLocation(this.blurProgram, "uStep"), step[0], step[1]);
      gl.drawArrays(gl.TRIANGLES, 0, 3);
    }
  }
}
