"""High-precision arcsin reference values for the kernel self-test.

Each entry is ``(x, arcsin(x))`` with ``x`` an exact binary64 value and the
reference given to 30 significant digits.
"""

ARCSIN_REFERENCES: tuple[tuple[float, str], ...] = (
    (-1.0, "-1.57079632679489661923132169164"),
    (-0.9999961853027344, "-1.56803419005282657034193609598"),
    (-0.9999847412109375, "-1.56527204804237784815158122079"),
    (-0.99993896484375, "-1.55974772714228705377291670732"),
    (-0.999755859375, "-1.54869879029173567930097265882"),
    (-0.9990234375, "-1.52659855564918130130475500368"),
    (-0.99609375, "-1.48237918158044719261614606582"),
    (-0.984375, "-1.39378864050686569223615840266"),
    (-0.9583333333333334, "-1.281109332797777320502229858"),
    (-0.9375, "-1.21537512510467312649286700837"),
    (-0.9166666666666666, "-1.15965846447254882018032296835"),
    (-0.875, "-1.06543581651073931226000681765"),
    (-0.8333333333333334, "-0.985110783337745726562531540347"),
    (-0.7916666666666666, "-0.913532173549380272562726014488"),
    (-0.75, "-0.848062078981481008052944338998"),
    (-0.7083333333333333, "-0.787134277997098832863730092854"),
    (-0.6666666666666667, "-0.729727656226966462756162789704"),
    (-0.625, "-0.675131532937031647209056265294"),
    (-0.5833333333333333, "-0.622826585412002842568826482791"),
    (-0.5416666666666667, "-0.572418572092820316558676593568"),
    (-0.5, "-0.523598775598298873077107230547"),
    (-0.45833333333333337, "-0.476119060911796411479139507756"),
    (-0.41666666666666663, "-0.429775431304527645164335853133"),
    (-0.375, "-0.384396774495639083038194872967"),
    (-0.33333333333333337, "-0.339836909454121976348703980486"),
    (-0.29166666666666663, "-0.29596880335893124681233657444"),
    (-0.25, "-0.252680255142078653485657436994"),
    (-0.20833333333333337, "-0.209870592262737800039836646363"),
    (-0.16666666666666663, "-0.167448079219689293020886087663"),
    (-0.125, "-0.125327831168065396874566986357"),
    (-0.08333333333333337, "-0.083430086610615042009205109062"),
    (-0.04166666666666663, "-0.0416787324225778281477334672351"),
    (0.0, "0.0"),
    (0.04166666666666674, "0.0416787324225779392665351243812"),
    (0.08333333333333326, "0.0834300866106149305993890688189"),
    (0.125, "0.125327831168065396874566986357"),
    (0.16666666666666674, "0.167448079219689405618051642805"),
    (0.20833333333333326, "0.209870592262737686526818236854"),
    (0.25, "0.252680255142078653485657436994"),
    (0.29166666666666674, "0.29596880335893136288131550098"),
    (0.33333333333333326, "0.339836909454121858591769579203"),
    (0.375, "0.384396774495639083038194872967"),
    (0.41666666666666674, "0.429775431304527767293109217933"),
    (0.45833333333333326, "0.476119060911796286563799852073"),
    (0.5, "0.523598775598298873077107230547"),
    (0.5416666666666667, "0.572418572092820316558676593568"),
    (0.5833333333333333, "0.622826585412002842568826482791"),
    (0.625, "0.675131532937031647209056265294"),
    (0.6666666666666667, "0.729727656226966462756162789704"),
    (0.7083333333333333, "0.787134277997098832863730092854"),
    (0.75, "0.848062078981481008052944338998"),
    (0.7916666666666667, "0.913532173549380454282522417082"),
    (0.8333333333333333, "0.985110783337745525715629378793"),
    (0.875, "1.06543581651073931226000681765"),
    (0.9166666666666667, "1.15965846447254909797732711122"),
    (0.9583333333333333, "1.28110933279777693183981694348"),
    (0.96875, "1.32014066445876582548218771893"),
    (0.9921875, "1.44571480320191383763011841785"),
    (0.998046875, "1.50828614979590630986313875185"),
    (0.99951171875, "1.53954505508942272011096492486"),
    (0.9998779296875, "1.55517116784481148501126740712"),
    (0.999969482421875, "1.56298380692654526865674635455"),
    (0.9999923706054688, "1.5668900743113654903239506877"),
    (1.0, "1.57079632679489661923132169164"),
)
