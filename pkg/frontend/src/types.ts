/** Wire types for the /v1 endpoints (the service is the source of truth). */

export interface Envelope<R> {
  tool_version: string;
  inputs_echo: Record<string, unknown>;
  results: R;
  warnings: string[];
}

export interface InterpretResults {
  design: {
    n_per_group: number;
    effect_size_sd: number;
    alpha: number;
    df: number;
    ncp: number;
  };
  evidence: { p_value: number; t_obs: number };
  power: number;
  l10_pequals: number;
  l10_ml: number;
  l10_plessthan: number;
  fpr50_pequals: number;
  fpr50_plessthan: number;
  prior_needed_pequals: number;
  prior_needed_plessthan: number;
  prior_needed_target_fpr: number;
  fpr_at_prior_pequals: number | null;
  fpr_at_prior_plessthan: number | null;
  calibration: { bf10: number; fpr50: number } | null;
}

export interface CurveRow {
  sweep_value: number;
  l10_pequals: number | null;
  l10_plessthan: number | null;
  fpr_pequals: number | null;
  fpr_plessthan: number | null;
  calibration_fpr50: number | null;
}

export interface CurveResults {
  sweep: string;
  p: number;
  prior_h1: number;
  rows: CurveRow[];
}

export type InterpretResponse = Envelope<InterpretResults>;
export type CurveResponse = Envelope<CurveResults>;

export interface ApiError {
  error: { code: string; message: string; field?: string };
}
