/** Thin typed client for the fprkit /v1 endpoints. */

import type { ApiError, CurveResponse, InterpretResponse } from "./types.js";
import type { ScenarioInputs, SweepKind } from "./state.js";

export class FieldError extends Error {
  constructor(
    message: string,
    readonly field: string | undefined,
    readonly status: number,
  ) {
    super(message);
  }
}

async function post<T>(baseUrl: string, path: string, body: unknown): Promise<T> {
  const resp = await fetch(`${baseUrl}${path}`, {
    method: "POST",
    headers: { "content-type": "application/json" },
    body: JSON.stringify(body),
  });
  if (!resp.ok) {
    const payload = (await resp.json().catch(() => null)) as ApiError | null;
    const err = payload?.error;
    throw new FieldError(err?.message ?? `request failed (${resp.status})`, err?.field, resp.status);
  }
  return (await resp.json()) as T;
}

export class ApiClient {
  constructor(readonly baseUrl: string) {}

  interpret(inputs: ScenarioInputs): Promise<InterpretResponse> {
    return post<InterpretResponse>(this.baseUrl, "/v1/interpret", {
      p: inputs.p,
      n_per_group: inputs.n_per_group,
      effect_size_sd: inputs.effect_size_sd,
      prior_h1: inputs.prior_h1,
      alpha: inputs.alpha,
    });
  }

  curve(inputs: ScenarioInputs, sweep: SweepKind, grid: number[]): Promise<CurveResponse> {
    return post<CurveResponse>(this.baseUrl, "/v1/curve", {
      sweep,
      grid,
      n_per_group: inputs.n_per_group,
      effect_size_sd: inputs.effect_size_sd,
      alpha: inputs.alpha,
      p: inputs.p,
      prior_h1: inputs.prior_h1,
    });
  }

  async health(): Promise<boolean> {
    try {
      const resp = await fetch(`${this.baseUrl}/v1/health`);
      return resp.ok;
    } catch {
      return false;
    }
  }
}

/** Grid used by the chart for each sweep kind (server computes the values). */
export function sweepGrid(kind: SweepKind): number[] {
  if (kind === "prior") {
    return Array.from({ length: 21 }, (_, i) => i / 20);
  }
  if (kind === "n") {
    return [4, 6, 8, 12, 16, 24, 32, 48, 64, 96, 128];
  }
  // p sweep: log-spaced from 0.001 to 0.1
  const points: number[] = [];
  for (let i = 0; i <= 24; i += 1) {
    points.push(Number((0.001 * Math.pow(100, i / 24)).toPrecision(4)));
  }
  return points;
}
