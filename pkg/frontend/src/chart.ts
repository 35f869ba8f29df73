/**
 * Two-series FPR chart (p-equals vs p-less-than) with the calibration bound
 * overlaid, drawn on a bare canvas. Hover readouts echo exact server values
 * through fmt(); nothing is recomputed client-side.
 */

import { fmt } from "./format.js";
import type { CurveResponse, CurveRow } from "./types.js";

export interface ChartSeries {
  name: string;
  color: string;
  points: { x: number; y: number }[];
}

/** Pull the plottable series out of a curve response (nulls dropped). */
export function chartSeries(response: CurveResponse): ChartSeries[] {
  const rows = response.results.rows;
  const pick = (key: keyof CurveRow, name: string, color: string): ChartSeries => ({
    name,
    color,
    points: rows
      .filter((row) => row[key] !== null)
      .map((row) => ({ x: row.sweep_value, y: row[key] as number })),
  });
  return [
    pick("fpr_pequals", "p-equals", "#c0392b"),
    pick("fpr_plessthan", "p-less-than", "#2471a3"),
    pick("calibration_fpr50", "calibration bound", "#7d6608"),
  ];
}

interface Scale {
  x0: number;
  x1: number;
  y0: number;
  y1: number;
  width: number;
  height: number;
  pad: number;
}

function makeScale(series: ChartSeries[], width: number, height: number): Scale {
  const xs = series.flatMap((s) => s.points.map((p) => p.x));
  const ys = series.flatMap((s) => s.points.map((p) => p.y));
  const x0 = Math.min(...xs);
  const x1 = Math.max(...xs);
  return {
    x0,
    x1: x1 === x0 ? x0 + 1 : x1,
    y0: 0,
    y1: Math.max(1e-12, ...ys),
    width,
    height,
    pad: 34,
  };
}

function toPx(scale: Scale, x: number, y: number): [number, number] {
  const { x0, x1, y0, y1, width, height, pad } = scale;
  const px = pad + ((x - x0) / (x1 - x0)) * (width - 2 * pad);
  const py = height - pad - ((y - y0) / (y1 - y0)) * (height - 2 * pad);
  return [px, py];
}

export function drawChart(
  canvas: HTMLCanvasElement,
  response: CurveResponse,
  hover: HTMLElement | null,
): void {
  const series = chartSeries(response).filter((s) => s.points.length > 0);
  const ctx = canvas.getContext("2d");
  if (!ctx || series.length === 0) return;
  const scale = makeScale(series, canvas.width, canvas.height);

  ctx.clearRect(0, 0, canvas.width, canvas.height);
  ctx.strokeStyle = "#888";
  ctx.strokeRect(scale.pad, scale.pad, canvas.width - 2 * scale.pad, canvas.height - 2 * scale.pad);

  for (const s of series) {
    ctx.strokeStyle = s.color;
    ctx.lineWidth = s.name === "calibration bound" ? 1 : 2;
    ctx.setLineDash(s.name === "calibration bound" ? [5, 4] : []);
    ctx.beginPath();
    s.points.forEach((point, i) => {
      const [px, py] = toPx(scale, point.x, point.y);
      if (i === 0) ctx.moveTo(px, py);
      else ctx.lineTo(px, py);
    });
    ctx.stroke();
  }
  ctx.setLineDash([]);

  if (hover) {
    canvas.onmousemove = (event: MouseEvent) => {
      const rect = canvas.getBoundingClientRect();
      const mx = event.clientX - rect.left;
      const row = nearestRow(response, scale, mx);
      hover.textContent = row ? hoverText(response.results.sweep, row) : "";
    };
    canvas.onmouseleave = () => {
      hover.textContent = "";
    };
  }
}

function nearestRow(response: CurveResponse, scale: Scale, mx: number): CurveRow | null {
  let best: CurveRow | null = null;
  let bestDist = Infinity;
  for (const row of response.results.rows) {
    const [px] = toPx(scale, row.sweep_value, 0);
    const d = Math.abs(px - mx);
    if (d < bestDist) {
      bestDist = d;
      best = row;
    }
  }
  return best;
}

/** Exact server values for the hovered grid point. */
export function hoverText(sweep: string, row: CurveRow): string {
  return (
    `${sweep} = ${fmt(row.sweep_value)}: ` +
    `FPR p-equals ${fmt(row.fpr_pequals)}, ` +
    `p-less-than ${fmt(row.fpr_plessthan)}, ` +
    `calibration ${fmt(row.calibration_fpr50)}`
  );
}
