#pragma once

// Published reference values, as decimal strings with their printed digits.

namespace xili::testing {

inline constexpr const char* kXi0 = "0.49712077818831410991";
inline constexpr const char* kA1 = "0.023095708966121033814";

inline const char* kEven[] = {
    "0.023343864534226183135",  "0.00025318173031652700506", "1.7209870418615355778e-6",
    "8.3159682500277216307e-9", "3.0655602327633313510e-11", "9.0229664497612087603e-14",
    "2.1893251340686846583e-16", "4.4843405072454944930e-19", "7.8974339566658717737e-22",
    "1.2134779622875435114e-24"};

inline const char* kOdd[] = {
    "0.023095708966121033814",  "0.00049798384992294867235", "5.0502547922191741696e-6",
    "3.2378414618810769603e-8", "1.4852419214918940045e-10", "5.2238407222768796166e-13",
    "1.4729420831622495667e-15", "3.4352126539793423994e-18", "6.7821598786771781572e-21",
    "1.1540437076606000624e-23"};

inline const char* kReciprocal[] = {
    "-0.0230957089661210338143102479065", "-0.0459061617276994534365358813998", "-0.0681486316594069122599620826562",
    "-0.089545433048398089752378459144",  "-0.109826396050622458253486711461",  "-0.128731287368373527211506921969",
    "-0.146012159089427308368403139905",  "-0.161435608581258419635214039431",  "-0.174784932895325800969831596126",
    "-0.185862161803051549940505866001",  "-0.194489954353028235590838150534",  "-0.200513344703746739263814823922",
    "-0.203801323942739062262628361287",  "-0.20424824564594307240714200573",   "-0.20177504405427703081208059797",
    "-0.19633025494134585958756091470",   "-0.18789083050993567984657371103",   "-0.17646274097813564381563835719",
    "-0.16208135689084447159310105477",   "-0.14481160761104406228773575035"};

inline const char* kLambda[] = {
    "0.0230957089661210338143102479065", "0.0923457352280466703857284861921", "0.207638920554324803791492046618",
    "0.368790479492241638590511489638",  "0.575542714461177452431106405493",  "0.82756601228237929742500282202",
    "1.12446011757095949058282010802",   "1.46575567714706063265551454198",   "1.85091604838253415532604486792",
    "2.27933936319315774369303405737",   "2.75036083822019606035454709285",   "3.26325532062461984807908598991",
    "3.81724005784794598710436795129",   "4.4114776786805985120806412969",    "5.0450793720267934585351114375",
    "5.7171082488687926394190666698",    "6.4265828721172029011455409609",    "7.1724809382917229592529707263",
    "7.9537430943119003048082250779",    "8.7692768720932151295994613534"};

inline const char* kLogXi[] = {"-0.023095708966121033814",  "0.023077158647902301379",  "0.0000370527438173686409",
                        "-0.00001840680531542237958", "-1.43018671152521547e-7",  "4.6906069489794377e-8",
                        "6.534558785292532e-10",      "-1.5860851386884509e-10", "-3.141596838950986e-12",
                        "5.99771484715187e-13"};

}  // namespace xili::testing
