import init, { explore_family, intersect, member } from "./pkg/stallings_web.js";

const $ = (id) => document.getElementById(id);

function status(el, ok, text) {
  el.className = "status " + (ok ? "ok" : "bad");
  el.textContent = text;
}

function clampFamilySliders() {
  const m = Math.max(2, +$("fm").value), n = Math.max(2, +$("fn").value);
  $("fk").max = m - 2;
  $("fl").max = n - 1;
  if (+$("fk").value > m - 2) $("fk").value = m - 2;
  if (+$("fl").value > n - 1) $("fl").value = n - 1;
  $("fkv").textContent = $("fk").value;
  $("flv").textContent = $("fl").value;
  return [m, n, +$("fk").value, +$("fl").value];
}

function renderFamily() {
  const [m, n, k, l] = clampFamilySliders();
  try {
    const r = JSON.parse(explore_family(m, n, k, l));
    const got = r.intersection.rank;
    status($("fstatus"), got === r.expected,
      `rank H = ${r.h.rank}, rank K = ${r.k.rank}, rank H ∩ K = ${got} ` +
      `(formula k(n−1)+ℓ = ${r.expected}; maximum (m−1)(n−1)+1 = ${r.max})`);
    $("fh").innerHTML = r.h.svg;
    $("fkg").innerHTML = r.k.svg;
    $("fi").innerHTML = r.intersection.svg;
    $("fbasis").textContent = r.intersection.basis.join(", ") || "(trivial)";
  } catch (e) {
    status($("fstatus"), false, String(e));
  }
}

function renderCustom() {
  try {
    const r = JSON.parse(intersect($("ch").value, $("ck").value));
    status($("cstatus"), true,
      `rank H = ${r.h.rank}, rank K = ${r.k.rank}, rank H ∩ K = ${r.intersection.rank}`);
    $("chg").innerHTML = r.h.svg;
    $("ckg").innerHTML = r.k.svg;
    $("cig").innerHTML = r.intersection.svg;
    $("cbasis").textContent = r.intersection.basis.join(", ") || "(trivial)";
    $("cdot").textContent = r.intersection.dot;
  } catch (e) {
    status($("cstatus"), false, String(e));
  }
}

function renderMember() {
  try {
    const r = JSON.parse(member($("mh").value, $("mw").value));
    const how = r.member
      ? `${r.word} reads a closed path at the base`
      : r.letters_read < r.length
        ? `${r.word}: no edge for letter ${r.letters_read + 1} of ${r.length}`
        : `${r.word} ends away from the base`;
    status($("mstatus"), r.member, (r.member ? "member: " : "not a member: ") + how);
    $("mg").innerHTML = r.svg;
  } catch (e) {
    status($("mstatus"), false, String(e));
  }
}

await init();
for (const id of ["fm", "fn", "fk", "fl"]) $(id).addEventListener("input", renderFamily);
for (const id of ["ch", "ck"]) $(id).addEventListener("input", renderCustom);
for (const id of ["mh", "mw"]) $(id).addEventListener("input", renderMember);
renderFamily();
renderCustom();
renderMember();
