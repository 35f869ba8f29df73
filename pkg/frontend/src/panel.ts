/**
 * Evidence panel rendering. Every number is fmt(service value) — the panel
 * performs no statistical arithmetic of its own.
 */

import { fmt } from "./format.js";
import type { InterpretResponse } from "./types.js";

function row(label: string, value: string, cssClass = ""): string {
  return `<div class="row ${cssClass}"><span class="label">${label}</span><span class="value">${value}</span></div>`;
}

export function renderPanel(container: HTMLElement, response: InterpretResponse): void {
  const r = response.results;
  const prior = response.inputs_echo["prior_h1"];
  const parts: string[] = [];

  parts.push(`<div class="headline">`);
  parts.push(row("FPR₅₀ (p-equals)", fmt(r.fpr50_pequals), "big"));
  parts.push(row("observed p", fmt(r.evidence.p_value)));
  parts.push(`</div>`);

  parts.push(`<h3>likelihood ratios L₁₀</h3>`);
  parts.push(row("p-equals · fixed effect", fmt(r.l10_pequals)));
  parts.push(row("p-equals · ML alternative", fmt(r.l10_ml)));
  parts.push(row("p-less-than · threshold = p", fmt(r.l10_plessthan)));

  parts.push(`<h3>false positive risk</h3>`);
  parts.push(row("FPR₅₀ · p-equals", fmt(r.fpr50_pequals)));
  parts.push(row("FPR₅₀ · p-less-than", fmt(r.fpr50_plessthan)));
  if (r.fpr_at_prior_pequals !== null && prior !== null) {
    parts.push(row(`FPR at prior ${fmt(Number(prior))} · p-equals`, fmt(r.fpr_at_prior_pequals)));
    parts.push(
      row(`FPR at prior ${fmt(Number(prior))} · p-less-than`, fmt(r.fpr_at_prior_plessthan)),
    );
  }
  parts.push(
    row(
      `prior needed for FPR ${fmt(r.prior_needed_target_fpr)} · p-equals`,
      fmt(r.prior_needed_pequals),
    ),
  );
  parts.push(
    row(
      `prior needed for FPR ${fmt(r.prior_needed_target_fpr)} · p-less-than`,
      fmt(r.prior_needed_plessthan),
    ),
  );

  parts.push(`<h3>calibration bound (−e·p·ln p)</h3>`);
  if (r.calibration) {
    parts.push(row("max BF₁₀", fmt(r.calibration.bf10)));
    parts.push(row("FPR₅₀ bound", fmt(r.calibration.fpr50)));
  } else {
    parts.push(`<div class="row muted">not defined for p &gt; 1/e</div>`);
  }

  parts.push(
    `<div class="meta">design: n/group ${fmt(r.design.n_per_group)}, effect ${fmt(
      r.design.effect_size_sd,
    )} SD, α ${fmt(r.design.alpha)} · df ${fmt(r.design.df)} · t ${fmt(
      r.evidence.t_obs,
    )} · power ${fmt(r.power)}</div>`,
  );
  for (const w of response.warnings) {
    parts.push(`<div class="warning">${w}</div>`);
  }
  container.innerHTML = parts.join("");
}

export function renderFieldErrors(form: HTMLElement, errors: Map<string, string>): void {
  for (const el of Array.from(form.querySelectorAll(".field-error"))) {
    el.textContent = "";
  }
  for (const [field, message] of errors) {
    const slot = form.querySelector(`.field-error[data-for="${field}"]`);
    if (slot) slot.textContent = message;
  }
}
