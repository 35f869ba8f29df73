/**
 * Calculator state: scenario inputs, client-side validation mirroring the
 * service bounds, URL (de)serialization for copy-link, and the sequencing
 * guard that discards stale responses.
 */

export type Approach = "p_equals" | "p_less_than";
export type SweepKind = "prior" | "p" | "n";

export interface ScenarioInputs {
  p: number;
  n_per_group: number;
  effect_size_sd: number;
  prior_h1: number;
  alpha: number;
  approach: Approach;
}

export interface CalculatorState {
  a: ScenarioInputs;
  b: ScenarioInputs | null; // second panel when comparing
  sweep: SweepKind;
}

export const DEFAULT_INPUTS: ScenarioInputs = {
  p: 0.05,
  n_per_group: 16,
  effect_size_sd: 1.0,
  prior_h1: 0.5,
  alpha: 0.05,
  approach: "p_equals",
};

export const DEBOUNCE_MS = 300;

/** Same bounds the service enforces; a message per offending field. */
export function validateInputs(inputs: ScenarioInputs): Map<string, string> {
  const errors = new Map<string, string>();
  if (!(inputs.p > 0 && inputs.p < 1)) errors.set("p", "p must lie in (0, 1)");
  if (!(Number.isInteger(inputs.n_per_group) && inputs.n_per_group >= 2)) {
    errors.set("n_per_group", "n per group must be an integer ≥ 2");
  }
  if (!(inputs.effect_size_sd >= 0 && Number.isFinite(inputs.effect_size_sd))) {
    errors.set("effect_size_sd", "effect size must be ≥ 0");
  }
  if (!(inputs.prior_h1 >= 0 && inputs.prior_h1 <= 1)) {
    errors.set("prior_h1", "prior must lie in [0, 1]");
  }
  if (!(inputs.alpha > 0 && inputs.alpha < 1)) errors.set("alpha", "alpha must lie in (0, 1)");
  return errors;
}

const SCENARIO_KEYS: (keyof ScenarioInputs)[] = [
  "p",
  "n_per_group",
  "effect_size_sd",
  "prior_h1",
  "alpha",
  "approach",
];

function writeScenario(params: URLSearchParams, inputs: ScenarioInputs, suffix: string): void {
  for (const key of SCENARIO_KEYS) {
    params.set(`${key}${suffix}`, String(inputs[key]));
  }
}

function readScenario(params: URLSearchParams, suffix: string): ScenarioInputs | null {
  if (!params.has(`p${suffix}`)) return null;
  const num = (key: string, fallback: number): number => {
    const raw = params.get(`${key}${suffix}`);
    const parsed = raw === null ? NaN : Number(raw);
    return Number.isFinite(parsed) ? parsed : fallback;
  };
  const approachRaw = params.get(`approach${suffix}`);
  return {
    p: num("p", DEFAULT_INPUTS.p),
    n_per_group: num("n_per_group", DEFAULT_INPUTS.n_per_group),
    effect_size_sd: num("effect_size_sd", DEFAULT_INPUTS.effect_size_sd),
    prior_h1: num("prior_h1", DEFAULT_INPUTS.prior_h1),
    alpha: num("alpha", DEFAULT_INPUTS.alpha),
    approach: approachRaw === "p_less_than" ? "p_less_than" : "p_equals",
  };
}

export function stateToQuery(state: CalculatorState): string {
  const params = new URLSearchParams();
  writeScenario(params, state.a, "");
  if (state.b) writeScenario(params, state.b, "2");
  params.set("sweep", state.sweep);
  return params.toString();
}

export function stateFromQuery(query: string): CalculatorState {
  const params = new URLSearchParams(query);
  const a = readScenario(params, "") ?? { ...DEFAULT_INPUTS };
  const b = readScenario(params, "2");
  const sweepRaw = params.get("sweep");
  const sweep: SweepKind = sweepRaw === "prior" || sweepRaw === "n" ? sweepRaw : "p";
  return { a, b, sweep };
}

/**
 * Monotone ticket counter per panel: responses landing after a newer request
 * was issued are discarded, so the panel always matches the displayed inputs.
 */
export class RequestSequencer {
  private latest = 0;

  begin(): number {
    this.latest += 1;
    return this.latest;
  }

  isCurrent(ticket: number): boolean {
    return ticket === this.latest;
  }
}
