import init, { analyze, gauss, expand } from "./pkg/gkz_web.js";

const DEN = 60;
const COLORS = ["#d62728", "#1f77b4", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"];

function gcd(a, b) {
  a = Math.abs(a); b = Math.abs(b);
  while (b) [a, b] = [b, a % b];
  return a;
}

function frac(k) {
  const g = gcd(k, DEN) || 1;
  const p = k / g, q = DEN / g;
  return q === 1 ? `${p}` : `${p}/${q}`;
}

function clear(ctx) {
  ctx.setTransform(1, 0, 0, 1, 0, 0);
  ctx.clearRect(0, 0, ctx.canvas.width, ctx.canvas.height);
}

// Configuration in the plane: triangulation, hull edges, points.
function drawPolygon(canvas, r) {
  const ctx = canvas.getContext("2d");
  clear(ctx);
  if (r.error || r.dim !== 2) {
    ctx.fillStyle = "#888";
    ctx.fillText(r.error ? "no picture" : `dimension ${r.dim}: not drawn`, 10, 20);
    return;
  }
  const pts = r.points;
  const xs = pts.map(p => p[0]), ys = pts.map(p => p[1]);
  const lo = Math.min(...xs, ...ys) - 1, hi = Math.max(...xs, ...ys) + 1;
  const s = canvas.width / (hi - lo);
  const X = x => (x - lo) * s, Y = y => canvas.height - (y - lo) * s;

  ctx.strokeStyle = "#eee";
  for (let v = Math.ceil(lo); v <= hi; v++) {
    ctx.beginPath(); ctx.moveTo(X(v), 0); ctx.lineTo(X(v), canvas.height); ctx.stroke();
    ctx.beginPath(); ctx.moveTo(0, Y(v)); ctx.lineTo(canvas.width, Y(v)); ctx.stroke();
  }
  ctx.strokeStyle = "#bbb";
  for (const t of r.triangulation) {
    ctx.beginPath();
    t.forEach((i, k) => (k ? ctx.lineTo : ctx.moveTo).call(ctx, X(pts[i - 1][0]), Y(pts[i - 1][1])));
    ctx.closePath(); ctx.stroke();
  }
  const factorOf = new Map();
  r.factors.forEach((f, k) => f.facets.forEach(i => factorOf.set(i, k)));
  r.facets.forEach((f, i) => {
    const [p, q] = f.points.map(j => pts[j - 1]).sort((u, v) => u[0] - v[0] || u[1] - v[1]).filter((_, k, a) => k === 0 || k === a.length - 1);
    ctx.lineWidth = f.selected ? 3 : 1.5;
    ctx.strokeStyle = f.selected ? COLORS[factorOf.get(i) % COLORS.length] : "#333";
    ctx.beginPath(); ctx.moveTo(X(p[0]), Y(p[1])); ctx.lineTo(X(q[0]), Y(q[1])); ctx.stroke();
  });
  ctx.lineWidth = 1;
  pts.forEach((p, i) => {
    const apex = i + 1 === r.j0;
    ctx.fillStyle = apex ? "#000" : "#555";
    ctx.beginPath(); ctx.arc(X(p[0]), Y(p[1]), apex ? 6 : 3.5, 0, 2 * Math.PI); ctx.fill();
    ctx.fillText(`${i + 1}`, X(p[0]) + 6, Y(p[1]) - 6);
  });
}

// Eigenvalues against the unit circle; multiplicity as ring count.
function drawRoots(canvas, r) {
  const ctx = canvas.getContext("2d");
  clear(ctx);
  if (r.error) return;
  const maxMod = Math.max(1, ...r.roots.map(z => Math.hypot(z.re, z.im)));
  const c = canvas.width / 2, s = (c - 20) / maxMod;
  ctx.strokeStyle = "#ddd";
  ctx.beginPath(); ctx.moveTo(0, c); ctx.lineTo(2 * c, c); ctx.moveTo(c, 0); ctx.lineTo(c, 2 * c); ctx.stroke();
  ctx.strokeStyle = "#999";
  ctx.beginPath(); ctx.arc(c, c, s, 0, 2 * Math.PI); ctx.stroke();
  for (const z of r.roots) {
    const x = c + z.re * s, y = c - z.im * s;
    ctx.fillStyle = COLORS[z.factor % COLORS.length];
    ctx.beginPath(); ctx.arc(x, y, 5, 0, 2 * Math.PI); ctx.fill();
    ctx.strokeStyle = ctx.fillStyle;
    for (let m = 1; m < Math.min(z.multiplicity, 6); m++) {
      ctx.beginPath(); ctx.arc(x, y, 5 + 3 * m, 0, 2 * Math.PI); ctx.stroke();
    }
  }
}

function summary(r) {
  if (r.error) return `error [${r.error.code}] ${r.error.path ? r.error.path + ": " : ""}${r.error.message}`;
  const lines = [
    `rank ${r.rank}, degree ${r.degree}, ${r.nonresonant ? "non-resonant" : "RESONANT (not certified)"}`,
    `lambda(t) = ${r.polynomial}`,
  ];
  for (const v of r.violations) {
    lines.push(`  resonant facet ${v.facet}: <(${v.functional.join(", ")}), gamma> = ${v.pairing.re}`);
  }
  return lines.join("\n");
}

function show(prefix, r) {
  drawPolygon(document.getElementById(`${prefix}-poly`), r);
  drawRoots(document.getElementById(`${prefix}-roots`), r);
  const out = document.getElementById(`${prefix}-out`);
  out.textContent = summary(r);
  out.className = r.error || !r.nonresonant ? "bad" : "ok";
}

function updateGauss() {
  const [a, b, c] = ["a", "b", "c"].map(id => frac(+document.getElementById(id).value));
  document.getElementById("a-val").textContent = a;
  document.getElementById("b-val").textContent = b;
  document.getElementById("c-val").textContent = c;
  const j0 = +document.getElementById("gauss-j0").value;
  show("gauss", JSON.parse(gauss(a, b, c, j0)));
}

function runJob() {
  show("job", JSON.parse(analyze(document.getElementById("job").value)));
}

function runExpand() {
  const r = JSON.parse(expand(document.getElementById("job").value, +document.getElementById("digits").value));
  const out = document.getElementById("job-out");
  if (r.error) { out.textContent = summary(r); out.className = "bad"; return; }
  out.className = r.certified ? "ok" : "bad";
  out.textContent = r.coefficients.map((z, k) => `t^${k}: ${z.re} + (${z.im})i`).join("\n");
}

await init();
for (const id of ["a", "b", "c", "gauss-j0"]) document.getElementById(id).addEventListener("input", updateGauss);
document.getElementById("run").addEventListener("click", runJob);
document.getElementById("expand").addEventListener("click", runExpand);
updateGauss();
runJob();
