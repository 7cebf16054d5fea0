(function () { globalVar = 'setting global'; })()

window.globalVar // answers 'setting global'
