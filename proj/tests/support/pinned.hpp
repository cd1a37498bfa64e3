#pragma once

// Regression values produced by the seeded search (seed 1). A change here
// means the sampling stream or an evaluator changed.

#include <cstddef>
#include <string>

namespace pinned {

inline const std::string kMoultonD = R"kv(statement=D
plane=moulton
index=0
point.S=(-11/35,-11/39)
point.A=(-34/21,5/6)
point.B=(8/35,8/33)
point.C=(14/17,-38/45)
point.A'=(21/20,-50137/21372)
point.B'=(-10/63,-358/2717)
point.C'=(64/11,-27851498/7509645)
derived.point.X=(-7256983268/7650249985,421319471/655735713)
derived.point.Y=(77141154/27939817,-3564361376/1257291765)
derived.point.Z=(4128077670122/5997766332793,-5320417475660242/8906683004197605)
derived.line.s=bent(-94220675339081417/175317085640629944,29083143798072373/219146357050787430)
failed=X, Y, Z not collinear
)kv";

inline const std::string kMoultonSPP = R"kv(statement=sPP
plane=moulton
index=0
point.A=(14/17,-355825/181662)
point.B=(-38/45,1829/10686)
point.C=(64/11,-1234015/117546)
point.A'=(4691484727/5023322839,33874920962/195909590721)
point.B'=(-7609764591/1571089841,-53060430726/20424167933)
point.C'=(19810748425/13948275113,220945319678/543982729407)
point.S=(1,42/29)
derived.point.M=(-845623/4092577,-59708210/159610503)
derived.point.A''=(-1400280914902708125126934783/157680360197676050893310657,-4075370833154690343548968258/6149534047709365984839115623)
derived.point.B''=(2826865899651693691/2337196968836909435,-39117671712520585078/91150681784639467965)
derived.point.C''=(1006620129740964205/50614268569669229,378188035871936422/1973956474217099931)
failed=M, C'', A'' not collinear
)kv";

inline const std::string kHall9D = R"kv(statement=D
plane=hall9
index=0
point.S=(2,0)
point.A=(5,1)
point.B=(5,8)
point.C=(2,3)
point.A'=(7,5)
point.B'=(1,5)
point.C'=(2,8)
derived.point.X=(5,5)
derived.point.Y=(4,6)
derived.point.Z=(0,2)
derived.line.s=[8,8]
failed=X, Y, Z not collinear
)kv";

// Chain from base (0,0),(2,0),(0,2) to target (-5,-5).
inline constexpr std::size_t kChainLength = 5;

}  // namespace pinned
