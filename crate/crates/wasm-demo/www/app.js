import init, { stanton_quotient, crank_slice, rank_distribution } from "./pkg/rankcrank_wasm_demo.js";

const $ = (id) => document.getElementById(id);

// bars for a Laurent polynomial {lo, coeffs: [decimal strings]}; optional overlay line
function bars(canvas, lo, values, overlay) {
  const ctx = canvas.getContext("2d");
  const w = canvas.width, h = canvas.height, pad = 20;
  ctx.clearRect(0, 0, w, h);
  const all = overlay ? values.concat(overlay) : values;
  const max = Math.max(1, ...all.map(Math.abs));
  const min = Math.min(0, ...all);
  const span = max - min || 1;
  const bw = (w - 2 * pad) / Math.max(values.length, 1);
  const y = (v) => h - pad - ((v - min) / span) * (h - 2 * pad);
  ctx.fillStyle = "#58a";
  values.forEach((v, i) => {
    ctx.fillStyle = v < 0 ? "#d54" : "#58a";
    const top = Math.min(y(v), y(0));
    ctx.fillRect(pad + i * bw + 1, top, Math.max(bw - 2, 1), Math.abs(y(v) - y(0)));
  });
  if (overlay) {
    ctx.strokeStyle = "#e80";
    ctx.beginPath();
    overlay.forEach((v, i) => {
      const px = pad + (i + 0.5) * bw;
      i ? ctx.lineTo(px, y(v)) : ctx.moveTo(px, y(v));
    });
    ctx.stroke();
  }
  ctx.fillStyle = "#333";
  ctx.fillText(`z^${lo}`, pad, h - 4);
  ctx.fillText(`z^${lo + values.length - 1}`, w - pad - 40, h - 4);
}

function guard(info, f) {
  try {
    info.classList.remove("err");
    f();
  } catch (e) {
    info.textContent = String(e);
    info.classList.add("err");
  }
}

function quotient() {
  const info = $("q-info");
  guard(info, () => {
    const r = JSON.parse(stanton_quotient($("q-stat").value, +$("q-ell").value, +$("q-n").value));
    const q = r.quotient;
    info.textContent = `size ${r.size}; quotient non-negative: ${r.nonnegative}; numerator unimodal: ${r.unimodal}`;
    bars($("q-canvas"), q.lo, q.coeffs.map(Number));
  });
}

function slice() {
  const info = $("c-info");
  guard(info, () => {
    const r = JSON.parse(crank_slice(+$("c-k").value, $("c-a").value, +$("c-n").value, +$("c-hi").value));
    const t = r.threshold === null ? "not eventually unimodal" : `unimodal for all ${r.threshold} < n < ${r.n_hi}`;
    info.textContent = `${r.spec}: ${t}; slice at n = ${r.n} unimodal: ${r.slice_unimodal}`;
    $("c-profile").innerHTML = r.profile
      .map((ok, n) => `<span class="${ok ? "ok" : "bad"}" title="n = ${n}"></span>`)
      .join("");
    bars($("c-canvas"), r.slice.lo, r.slice.coeffs.map(Number));
  });
}

function distribution() {
  const info = $("r-info");
  guard(info, () => {
    const s = JSON.parse(rank_distribution(+$("r-n").value));
    const inRange = s.filter((x) => x.in_range);
    const worst = Math.max(...inRange.map((x) => x.rel_error));
    info.textContent = `γ = ${s[0].gamma.toFixed(4)}; largest relative error inside the window: ${worst.toFixed(3)}`;
    bars($("r-canvas"), s[0].m, s.map((x) => Number(x.actual)), s.map((x) => x.predicted));
  });
}

await init();
$("q-go").onclick = quotient;
$("c-go").onclick = slice;
$("r-go").onclick = distribution;
quotient();
slice();
distribution();
