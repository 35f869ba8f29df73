/**
 * Fixed display formatting. Every number shown in the UI goes through
 * fmt() applied to the raw service value, so "what the server said" and
 * "what the panel shows" are string-equal by construction.
 */

export function fmt(value: number | null | undefined): string {
  if (value === null || value === undefined || Number.isNaN(value)) return "–";
  if (value === 0) return "0";
  const abs = Math.abs(value);
  if (abs >= 1e5 || abs < 1e-4) {
    return value.toExponential(3);
  }
  // 4 significant digits, trailing zeros trimmed
  const s = value.toPrecision(4);
  return s.includes(".") ? s.replace(/\.?0+$/, "") : s;
}
